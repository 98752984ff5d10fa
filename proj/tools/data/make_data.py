#!/usr/bin/env python3
"""Regenerates the bundled data files under data/.

Requires fontTools (ships with matplotlib) and pycountry. Output is
deterministic; rerunning produces byte-identical files.

    python3 tools/data/make_data.py [--out data]
"""
import argparse
import os
import random

import matplotlib
import pycountry
from fontTools.ttLib import TTFont

from topics import NON_ASCII_WORDS, TOPICS

FONTS = [
    # (file, svg family, weight)
    ("DejaVuSans.ttf", "DejaVu Sans", "normal"),
    ("DejaVuSerif.ttf", "DejaVu Serif", "normal"),
    ("DejaVuSansMono.ttf", "DejaVu Sans Mono", "normal"),
    ("STIXGeneral.ttf", "STIXGeneral", "normal"),
    ("cmr10.ttf", "cmr10", "normal"),
    ("cmss10.ttf", "cmss10", "normal"),
    ("cmtt10.ttf", "cmtt10", "normal"),
    ("cmb10.ttf", "cmb10", "normal"),
    ("DejaVuSans-Bold.ttf", "DejaVu Sans", "bold"),
]

PLACE_COUNT = 2123
TOY_WORDS = 1000
TOY_DIM = 32


def ascii_only(s):
    return all(ord(c) < 128 for c in s)


def write_fonts(out):
    ttf_dir = os.path.join(os.path.dirname(matplotlib.__file__), "mpl-data", "fonts", "ttf")
    for idx, (fname, family, weight) in enumerate(FONTS):
        font = TTFont(os.path.join(ttf_dir, fname))
        upem = font["head"].unitsPerEm
        cmap = font.getBestCmap()
        hmtx = font["hmtx"].metrics
        scale = 1000.0 / upem
        lines = [
            "# glyph advances in 1/1000 em; one 'advance <codepoint> <width>' per glyph",
            f"family {family}",
            f"weight {weight}",
            f"ascent {round(font['hhea'].ascent * scale)}",
            f"descent {round(-font['hhea'].descent * scale)}",
        ]
        for cp in range(32, 127):
            glyph = cmap[cp]
            lines.append(f"advance {cp} {round(hmtx[glyph][0] * scale)}")
        path = os.path.join(out, "fonts", f"font{idx}.metrics")
        with open(path, "w", encoding="utf-8") as f:
            f.write("\n".join(lines) + "\n")


def clean_place(name):
    if not ascii_only(name):
        return None
    if any(c in name for c in ",()[]|;"):
        return None
    if len(name) > 18 or len(name) < 3:
        return None
    return name


def write_places(out):
    seen = set()
    places = []

    def add(name):
        name = clean_place(name)
        if name and name not in seen:
            seen.add(name)
            places.append(name)

    for c in sorted(pycountry.countries, key=lambda c: c.alpha_2):
        add(getattr(c, "common_name", None) or c.name)
    preferred = ("State", "Province", "Region", "County", "Territory")
    subs = sorted(pycountry.subdivisions, key=lambda s: s.code)
    for s in subs:
        if s.type in preferred:
            add(s.name)
    for s in subs:
        add(s.name)
        if len(places) >= PLACE_COUNT:
            break
    assert len(places) >= PLACE_COUNT, len(places)
    with open(os.path.join(out, "places.txt"), "w", encoding="utf-8") as f:
        f.write("\n".join(places[:PLACE_COUNT]) + "\n")


MONTHS = [
    ("January", "Jan"), ("February", "Feb"), ("March", "Mar"), ("April", "Apr"),
    ("May", "May"), ("June", "Jun"), ("July", "Jul"), ("August", "Aug"),
    ("September", "Sep"), ("October", "Oct"), ("November", "Nov"), ("December", "Dec"),
]
DAYS = [
    ("Monday", "Mon", "Mon"), ("Tuesday", "Tue", "Tues"), ("Wednesday", "Wed", "Wed"),
    ("Thursday", "Thu", "Thurs"), ("Friday", "Fri", "Fri"), ("Saturday", "Sat", "Sat"),
    ("Sunday", "Sun", "Sun"),
]


def write_calendar(out):
    with open(os.path.join(out, "months.txt"), "w", encoding="utf-8") as f:
        f.write("# long<TAB>short, calendar order\n")
        for long, short in MONTHS:
            f.write(f"{long}\t{short}\n")
    with open(os.path.join(out, "days.txt"), "w", encoding="utf-8") as f:
        f.write("# long<TAB>short<TAB>informal, week order\n")
        for row in DAYS:
            f.write("\t".join(row) + "\n")


def write_vocab(out):
    rng = random.Random(20230905)
    seeds = [t[0] for t in TOPICS]
    assert len(seeds) == 100, len(seeds)
    ascii_target = TOY_WORDS - len(NON_ASCII_WORDS)
    seen = set()
    entries = []  # (word, topic index)
    for ti, topic in enumerate(TOPICS):
        for w in topic:
            assert ascii_only(w), w
            if w not in seen:
                seen.add(w)
                entries.append((w, ti))
    assert len(entries) >= ascii_target, f"need {ascii_target} ascii words, have {len(entries)}"
    # Trim the tail of the largest topics, never removing a seed.
    while len(entries) > ascii_target:
        counts = {}
        for w, ti in entries:
            counts[ti] = counts.get(ti, 0) + 1
        big = max(counts, key=lambda t: (counts[t], t))
        for i in range(len(entries) - 1, -1, -1):
            if entries[i][1] == big and entries[i][0] not in seeds:
                del entries[i]
                break
    for i, w in enumerate(NON_ASCII_WORDS):
        entries.append((w, i % len(TOPICS)))

    centroids = [[rng.gauss(0, 1) for _ in range(TOY_DIM)] for _ in TOPICS]
    lines = []
    for w, ti in entries:
        vec = [c + 0.55 * rng.gauss(0, 1) for c in centroids[ti]]
        lines.append(w + " " + " ".join(f"{v:.5f}" for v in vec))
    order = list(range(len(lines)))
    rng.shuffle(order)
    with open(os.path.join(out, "toy_embeddings.txt"), "w", encoding="utf-8") as f:
        f.write("\n".join(lines[i] for i in order) + "\n")
    with open(os.path.join(out, "seed_objects.txt"), "w", encoding="utf-8") as f:
        f.write("\n".join(seeds) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "..", "data"))
    args = ap.parse_args()
    os.makedirs(os.path.join(args.out, "fonts"), exist_ok=True)
    write_fonts(args.out)
    write_places(args.out)
    write_calendar(args.out)
    write_vocab(args.out)


if __name__ == "__main__":
    main()
