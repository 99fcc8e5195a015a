#!/usr/bin/env python3
# Copyright 2026 The punctkit Authors.
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

"""Builds tests/data/kjv_paragraphs.jsonl from the public-domain `kjv` npm
package (json/verses-1769.json and json/layout-1769.json)."""

import argparse
import json
import re


def paragraphs(layout, verses):
    current = []
    for entry in layout:
        kind = entry[0]
        if kind in ("PARAGRAPH", "CHAPTER", "BOOK") and current:
            yield current
            current = []
        elif kind == "VERSE":
            current.append(entry[1])
    if current:
        yield current


def clean(text):
    text = text.replace("#", "").replace("[", "").replace("]", "")
    return re.sub(r"\s+", " ", text).strip()


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--package", required=True, help="kjv package root")
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--out", required=True)
    args = parser.parse_args()

    with open(f"{args.package}/json/verses-1769.json", encoding="utf-8") as f:
        verses = json.load(f)
    with open(f"{args.package}/json/layout-1769.json", encoding="utf-8") as f:
        layout = json.load(f)

    paras = list(paragraphs(layout, verses))
    stride = max(1, len(paras) // args.count)
    with open(args.out, "w", encoding="utf-8") as out:
        for refs in paras[::stride][: args.count]:
            text = " ".join(clean(verses[r]) for r in refs)
            doc = {"id": refs[0], "text": text}
            out.write(json.dumps(doc, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
