"""Hand-curated topic clusters for the toy embedding file.

The first word of each topic is a seed object; the rest are related words
that the toy vectors place near it.
"""

TOPICS = [
    ["toothbrush", "toothpaste", "floss", "mouthwash", "dentist", "enamel", "bristles", "gums", "plaque", "molar", "whitening"],
    ["coffee", "espresso", "latte", "cappuccino", "mocha", "roast", "beans", "barista", "caffeine", "brew", "decaf"],
    ["notebook", "journal", "diary", "sketchbook", "planner", "notepad", "binder", "paper", "pages", "ruled", "spiral"],
    ["pencil", "eraser", "sharpener", "graphite", "crayon", "marker", "pen", "ink", "stylus", "chalk", "charcoal"],
    ["chair", "stool", "bench", "armchair", "recliner", "seat", "sofa", "couch", "ottoman", "cushion", "upholstery"],
    ["table", "desk", "countertop", "workbench", "dining", "tabletop", "nightstand", "console", "sideboard", "dresser", "cabinet"],
    ["lamp", "lantern", "bulb", "chandelier", "sconce", "flashlight", "torch", "candle", "wick", "lampshade", "dimmer"],
    ["bicycle", "bike", "pedal", "handlebar", "saddle", "cyclist", "spokes", "derailleur", "tandem", "unicycle", "tricycle"],
    ["car", "sedan", "hatchback", "coupe", "convertible", "minivan", "wagon", "automobile", "vehicle", "motorist", "dashboard"],
    ["umbrella", "parasol", "raincoat", "poncho", "galoshes", "drizzle", "downpour", "canopy", "rainfall", "waterproof", "shower"],
    ["guitar", "banjo", "ukulele", "mandolin", "fretboard", "strings", "strum", "acoustic", "amplifier", "pick", "chord"],
    ["piano", "keyboard", "harpsichord", "organ", "pianist", "keys", "sonata", "concerto", "melody", "tuning", "grand"],
    ["camera", "lens", "shutter", "tripod", "aperture", "photograph", "snapshot", "zoom", "viewfinder", "flash", "film"],
    ["telephone", "phone", "handset", "receiver", "dial", "ringtone", "voicemail", "landline", "hotline", "operator", "callback"],
    ["laptop", "computer", "notebookpc", "ultrabook", "touchpad", "chromebook", "desktop", "monitor", "processor", "motherboard", "workstation"],
    ["bottle", "flask", "jug", "canteen", "decanter", "carafe", "vial", "thermos", "cork", "stopper", "pitcher"],
    ["cup", "mug", "teacup", "tumbler", "goblet", "chalice", "beaker", "saucer", "glassware", "stein", "tankard"],
    ["spoon", "fork", "knife", "ladle", "spatula", "whisk", "tongs", "cutlery", "utensil", "teaspoon", "tablespoon"],
    ["plate", "dish", "platter", "bowl", "saucepan", "tray", "crockery", "porcelain", "dinnerware", "casserole", "tureen"],
    ["bread", "loaf", "baguette", "sourdough", "rye", "toast", "crust", "croissant", "bagel", "brioche", "bakery"],
    ["apple", "pear", "orchard", "cider", "crabapple", "peach", "plum", "apricot", "nectarine", "quince", "fruit"],
    ["banana", "plantain", "mango", "papaya", "pineapple", "coconut", "guava", "tropical", "kiwi", "passionfruit", "lychee"],
    ["cheese", "cheddar", "brie", "gouda", "mozzarella", "parmesan", "feta", "camembert", "ricotta", "gruyere", "dairy"],
    ["pizza", "pepperoni", "calzone", "flatbread", "crust", "oregano", "marinara", "pizzeria", "topping", "slice", "stromboli"],
    ["chocolate", "cocoa", "truffle", "fudge", "praline", "bonbon", "caramel", "toffee", "nougat", "confection", "ganache"],
    ["tea", "chamomile", "oolong", "matcha", "teapot", "infusion", "herbal", "earlgrey", "sencha", "kettle", "steep"],
    ["shoe", "sneaker", "boot", "sandal", "loafer", "slipper", "heel", "footwear", "moccasin", "clog", "shoelace"],
    ["shirt", "blouse", "tshirt", "polo", "sweater", "cardigan", "jersey", "tunic", "hoodie", "collar", "sleeve"],
    ["hat", "cap", "beanie", "fedora", "beret", "bonnet", "sombrero", "helmet", "visor", "headband", "turban"],
    ["watch", "wristwatch", "clock", "stopwatch", "timer", "chronograph", "sundial", "hourglass", "pendulum", "alarm", "dial"],
    ["backpack", "rucksack", "knapsack", "satchel", "duffel", "tote", "handbag", "purse", "briefcase", "luggage", "suitcase"],
    ["key", "lock", "padlock", "keyhole", "deadbolt", "latch", "keychain", "locksmith", "combination", "bolt", "hinge"],
    ["door", "doorway", "gate", "threshold", "doorknob", "doorbell", "entrance", "porch", "foyer", "hallway", "vestibule"],
    ["window", "windowsill", "pane", "shutters", "curtain", "blinds", "skylight", "casement", "glazing", "drapes", "awning"],
    ["bed", "mattress", "pillow", "blanket", "quilt", "duvet", "bedsheet", "headboard", "bunk", "cot", "hammock"],
    ["towel", "washcloth", "bathrobe", "bathtub", "sink", "faucet", "soap", "shampoo", "loofah", "sponge", "lather"],
    ["mirror", "reflection", "vanity", "looking", "compact", "glass", "silvered", "dressing", "cosmetics", "makeup", "lipstick"],
    ["clockwork", "gear", "cog", "sprocket", "spring", "ratchet", "flywheel", "escapement", "mechanism", "axle", "crank"],
    ["hammer", "mallet", "nail", "chisel", "screwdriver", "wrench", "pliers", "toolbox", "saw", "drill", "anvil"],
    ["ladder", "stepladder", "rung", "scaffold", "staircase", "stairs", "steps", "banister", "railing", "landing", "escalator"],
    ["bucket", "pail", "mop", "broom", "dustpan", "scrub", "detergent", "bleach", "vacuum", "janitor", "sweep"],
    ["garden", "flowerbed", "greenhouse", "compost", "trowel", "shovel", "rake", "hoe", "seedling", "mulch", "hedge"],
    ["flower", "rose", "tulip", "daisy", "lily", "orchid", "sunflower", "petal", "blossom", "bouquet", "daffodil"],
    ["tree", "oak", "maple", "birch", "pine", "willow", "cedar", "elm", "spruce", "sapling", "timber"],
    ["river", "stream", "creek", "brook", "tributary", "estuary", "delta", "riverbank", "rapids", "waterfall", "canal"],
    ["mountain", "peak", "summit", "ridge", "cliff", "valley", "glacier", "foothills", "alpine", "slope", "plateau"],
    ["ocean", "sea", "tide", "wave", "surf", "coral", "reef", "lagoon", "seabed", "marine", "shoreline"],
    ["beach", "sand", "dune", "seashell", "boardwalk", "sunbathing", "coast", "seaside", "pier", "lifeguard", "sandcastle"],
    ["dog", "puppy", "terrier", "retriever", "beagle", "poodle", "collie", "bulldog", "hound", "spaniel", "kennel"],
    ["cat", "kitten", "tabby", "siamese", "persian", "feline", "whiskers", "purr", "litter", "meow", "calico"],
    ["horse", "pony", "stallion", "mare", "foal", "stable", "gallop", "saddlebag", "equine", "rider", "bridle"],
    ["bird", "sparrow", "robin", "finch", "warbler", "starling", "songbird", "feather", "nest", "wren", "thrush"],
    ["fish", "trout", "salmon", "cod", "tuna", "halibut", "mackerel", "sardine", "herring", "perch", "carp"],
    ["boat", "sailboat", "canoe", "kayak", "yacht", "dinghy", "rowboat", "ferry", "catamaran", "paddle", "oar"],
    ["airplane", "aircraft", "jet", "airliner", "cockpit", "runway", "hangar", "propeller", "glider", "fuselage", "pilot"],
    ["train", "locomotive", "railway", "railroad", "carriage", "caboose", "freight", "platform", "station", "conductor", "tracks"],
    ["bus", "minibus", "coach", "shuttle", "tram", "trolley", "busstop", "commuter", "fare", "depot", "route"],
    ["book", "novel", "paperback", "hardcover", "chapter", "author", "bookshelf", "library", "bestseller", "anthology", "manuscript"],
    ["newspaper", "tabloid", "headline", "editorial", "columnist", "reporter", "journalism", "gazette", "press", "article", "byline"],
    ["television", "tv", "broadcast", "sitcom", "channel", "remote", "antenna", "screen", "episode", "series", "network"],
    ["radio", "transistor", "broadcaster", "frequency", "station", "airwaves", "podcast", "listener", "shortwave", "tuner", "signal"],
    ["ball", "football", "soccer", "basketball", "volleyball", "baseball", "kickball", "dodgeball", "rugby", "netball", "goalpost"],
    ["racket", "tennis", "badminton", "squash", "shuttlecock", "paddleball", "pickleball", "court", "serve", "volley", "tournament"],
    ["kite", "string", "flying", "breeze", "tail", "glide", "wind", "soar", "spool", "paraglider", "windsock"],
    ["balloon", "helium", "inflate", "party", "confetti", "streamers", "birthday", "celebration", "festive", "decorations", "pinata"],
    ["candy", "lollipop", "gumdrop", "jellybean", "licorice", "marshmallow", "sweets", "gummy", "candycane", "sherbet", "taffy"],
    ["cake", "cupcake", "frosting", "icing", "sponge", "cheesecake", "pastry", "muffin", "doughnut", "pie", "tart"],
    ["soup", "broth", "stew", "chowder", "bisque", "gazpacho", "minestrone", "goulash", "consomme", "bouillon", "ramen"],
    ["rice", "grain", "risotto", "paella", "sushi", "pilaf", "basmati", "jasmine", "porridge", "congee", "quinoa"],
    ["pasta", "spaghetti", "noodles", "macaroni", "lasagna", "penne", "fettuccine", "ravioli", "linguine", "tortellini", "gnocchi"],
    ["salad", "lettuce", "spinach", "arugula", "kale", "coleslaw", "vinaigrette", "crouton", "cucumber", "radish", "celery"],
    ["tomato", "ketchup", "salsa", "tomatoes", "basil", "pesto", "bruschetta", "ripe", "vine", "heirloom", "passata"],
    ["potato", "fries", "mashed", "spud", "hashbrown", "tuber", "russet", "yam", "chips", "gratin", "wedges"],
    ["egg", "omelet", "yolk", "eggshell", "scrambled", "poached", "frittata", "quiche", "custard", "meringue", "souffle"],
    ["milk", "cream", "yogurt", "butter", "buttermilk", "kefir", "milkshake", "lactose", "skim", "creamer", "whey"],
    ["honey", "beeswax", "beehive", "honeycomb", "bees", "nectar", "pollen", "apiary", "beekeeper", "syrup", "molasses"],
    ["salt", "pepper", "seasoning", "spice", "paprika", "cumin", "turmeric", "cinnamon", "nutmeg", "clove", "saffron"],
    ["wallet", "billfold", "cash", "coins", "banknote", "currency", "money", "purse", "debit", "savings", "pocket"],
    ["ring", "necklace", "bracelet", "earring", "pendant", "brooch", "jewelry", "diamond", "gemstone", "sapphire", "emerald"],
    ["glove", "mitten", "scarf", "earmuffs", "parka", "overcoat", "woolen", "fleece", "winter", "snowsuit", "thermal"],
    ["sock", "stocking", "tights", "hosiery", "ankle", "argyle", "knee", "leggings", "garter", "footie", "wool"],
    ["map", "atlas", "globe", "compass", "cartography", "latitude", "longitude", "legend", "terrain", "survey", "navigation"],
    ["tent", "campsite", "sleepingbag", "campfire", "hiking", "trail", "backpacking", "lean", "bivouac", "camping", "outdoors"],
    ["candle", "candlestick", "tealight", "votive", "candelabra", "paraffin", "soy", "scented", "flicker", "melted", "wax"],
    ["scissors", "shears", "clippers", "snips", "blade", "cutting", "trimming", "razor", "scalpel", "boxcutter", "secateurs"],
    ["envelope", "letter", "stamp", "postcard", "mailbox", "postage", "postman", "parcel", "courier", "postmark", "stationery"],
    ["calendar", "agenda", "schedule", "appointment", "deadline", "weekday", "holiday", "reminder", "datebook", "timetable", "itinerary"],
    ["battery", "charger", "voltage", "lithium", "recharge", "powerbank", "alkaline", "cell", "terminal", "capacitor", "electrode"],
    ["fan", "ventilator", "blower", "airflow", "cooling", "ceiling", "breezeway", "exhaust", "oscillating", "draft", "air"],
    ["refrigerator", "fridge", "freezer", "icebox", "cooler", "refrigeration", "icemaker", "chilled", "frozen", "crisper", "thaw"],
    ["oven", "stove", "microwave", "toaster", "griddle", "broiler", "cooktop", "range", "burner", "skillet", "grill"],
    ["blender", "mixer", "juicer", "smoothie", "puree", "processor", "grinder", "chopper", "mixing", "liquidize", "pulse"],
    ["sofa", "loveseat", "divan", "settee", "futon", "chaise", "sectional", "daybed", "chesterfield", "lounge", "beanbag"],
    ["carpet", "rug", "doormat", "mat", "tapestry", "flooring", "linoleum", "tiles", "parquet", "hardwood", "laminate"],
    ["painting", "canvas", "easel", "portrait", "landscape", "watercolor", "acrylic", "fresco", "mural", "palette", "brushstroke"],
    ["sculpture", "statue", "bust", "marble", "bronze", "figurine", "carving", "sculptor", "monument", "relief", "pedestal"],
    ["violin", "viola", "cello", "fiddle", "bow", "violinist", "orchestra", "quartet", "symphony", "rosin", "pizzicato"],
    ["drum", "snare", "cymbal", "timpani", "bongo", "tambourine", "percussion", "drummer", "drumstick", "conga", "xylophone"],
    ["puzzle", "jigsaw", "crossword", "sudoku", "riddle", "maze", "brainteaser", "rubik", "enigma", "conundrum", "tangram"],
    ["toy", "doll", "teddy", "yoyo", "rattle", "marbles", "lego", "plaything", "dollhouse", "figurines", "playroom"],
]

# Entries the ASCII filter must drop.
NON_ASCII_WORDS = [
    "café", "naïve", "résumé", "jalapeño", "piñata", "façade",
    "crème", "déjà", "señor", "über", "smörgåsbord", "fiancé",
]
