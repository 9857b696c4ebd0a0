#!/usr/bin/env python3
# Copyright 2026 The Stylomark Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes expected builtin-classifier outputs for a fixed set of texts.

Scores are computed with explicit dense vectors over the seed vocabulary in
exact rational arithmetic, so the fixture checks the closed form used by the
C++ classifier and decides ties without rounding noise.
"""

import argparse
from fractions import Fraction
import json
import math
import re


def records(path):
    for line in open(path, encoding="utf-8"):
        line = line.rstrip("\n")
        if not line.strip() or line.strip().startswith("#"):
            continue
        yield [f.strip() for f in line.split("\t")]


def words(text):
    out = []
    for raw in re.split(r"[\s–—]+", text):
        w = re.sub(r"^[^0-9A-Za-z]+|[^0-9A-Za-z]+$", "", raw)
        if w:
            out.append(w.lower())
    return out


def classify(text, labels, seeds):
    bags = []
    vocab = set()
    for label in labels:
        terms = []
        for t in seeds[label]:
            if t not in terms:
                terms.append(t)
        n = len(terms)
        bag = {t: 2 - Fraction(r, n) for r, t in enumerate(terms)}
        bags.append(bag)
        vocab.update(bag)
    vocab = sorted(vocab)
    counts = {}
    for w in words(text):
        counts[w] = counts.get(w, 0) + 1
    t = [Fraction(counts.get(w, 0) + 1) for w in vocab]
    t_norm2 = sum(a * a for a in t)
    squared = []  # exact score^2; every dot product is positive
    for bag in bags:
        s = [1 + bag.get(w, Fraction(0)) for w in vocab]
        dot = sum(a * b for a, b in zip(t, s))
        squared.append(dot * dot / (t_norm2 * sum(b * b for b in s)))
    best = 0
    for i, v in enumerate(squared):
        if v > squared[best]:
            best = i
    return best, [math.sqrt(v) for v in squared]


TEXTS = [
    "The old mill stood by the river.",
    "She measured the voltage across the circuit twice.",
    "Nothing here matches anything at all, zzz qqq.",
    "",
    "Music filled the hall and the crowd sang loudly.",
    "He tasted the sweet soup and the bitter tea.",
    "The hands of the potter shaped the wet clay.",
    "Ancient empires rose and fell across the centuries.",
    "Run, jump, kick: the legs of the athlete never stopped.",
    "A cold breeze touched her skin.",
    "The algorithm sorted the data in linear time.",
    "Roses and smoke and fresh bread, the smell of the market.",
    "Her stomach ached and her heart raced with hunger.",
    "The painter saw bright colours in the evening light.",
    "Philosophy asks what justice and virtue really mean.",
    "The the the the the.",
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--labels", default="data/labels.tsv")
    parser.add_argument("--seeds", default="data/seed_terms.tsv")
    parser.add_argument("--out",
                        default="tests/fixtures/classifier_conformance.json")
    args = parser.parse_args()

    labels = {"acrostic": [], "sensor": []}
    labels_version = None
    for f in records(args.labels):
        if f[0] == "version":
            labels_version = f[1]
        else:
            labels[f[0]].append(f[1])
    seeds = {}
    seeds_version = None
    for f in records(args.seeds):
        if f[0] == "version":
            seeds_version = f[1]
        else:
            seeds.setdefault(f[1], []).extend(t.lower() for t in f[2].split())

    cases = []
    for text in TEXTS:
        for feature in ("acrostic", "sensor"):
            index, scores = classify(text, labels[feature], seeds)
            cases.append({"text": text, "feature": feature, "index": index,
                          "scores": scores})
    with open(args.out, "w", encoding="utf-8") as out:
        json.dump({"labels_version": labels_version,
                   "seeds_version": seeds_version, "cases": cases},
                  out, indent=1)
        out.write("\n")


if __name__ == "__main__":
    main()
