#!/usr/bin/env python3
# Copyright 2026 The Typogen Authors
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
"""Rebuilds the bundled datasets under data/ from published packages.

Sources (fetched with `pip download` / `npm pack`):
  seed corpus   codespell 2.4.3        codespell_lib/data/dictionary.txt
  lexicon       pyspellchecker 0.9.1   spellchecker/resources/en.json.gz
  corpus        vaderSentiment 3.3.2   Amazon and movie review snippets
                sentiment 5.0.2 (npm)  UCI labelled review sentences

Usage: tools/prepare_data.py [--out data] [--cache /tmp/typogen-sources]
"""

import argparse
import gzip
import json
import pathlib
import random
import re
import subprocess
import tarfile
import zipfile

ALPHA = re.compile(r"[a-z]+")


def fetch_pip(name, cache, sdist=False):
    cmd = ["pip", "download", "--no-deps", "-d", str(cache), name]
    if sdist:
        cmd[2:2] = ["--no-binary", ":all:"]
    subprocess.run(cmd, check=True, capture_output=True)
    pattern = name.split("==")[0].replace("-", "_") if not sdist else name.split("==")[0]
    ext = "*.tar.gz" if sdist else "*.whl"
    hits = sorted(p for p in cache.glob(ext)
                  if p.name.lower().startswith(pattern.lower()))
    return hits[-1]


def fetch_npm(name, cache):
    out = subprocess.run(["npm", "pack", name, "--silent"], cwd=cache,
                         check=True, capture_output=True, text=True)
    return cache / out.stdout.strip().splitlines()[-1]


def seed_pairs(cache):
    wheel = zipfile.ZipFile(fetch_pip("codespell==2.4.3", cache))
    text = wheel.read("codespell_lib/data/dictionary.txt").decode("utf-8")
    pairs = []
    for line in text.splitlines():
        if "->" not in line:
            continue
        typo, correct = line.split("->", 1)
        correct = correct.strip()
        if "," in correct:  # ambiguous entries list several corrections
            continue
        if ALPHA.fullmatch(typo) and ALPHA.fullmatch(correct) and typo != correct:
            pairs.append((typo, correct))
    return pairs


def lexicon(cache):
    wheel = zipfile.ZipFile(fetch_pip("pyspellchecker==0.9.1", cache))
    freq = json.loads(gzip.decompress(
        wheel.read("spellchecker/resources/en.json.gz")))
    return sorted((w, c) for w, c in freq.items() if ALPHA.fullmatch(w))


def normalize_sentence(text):
    if re.search(r"[0-9/@#]", text):
        return ""
    text = text.lower().replace("-", " ")
    text = re.sub(r"[^a-z' ]+", " ", text)
    tokens = [t.strip("'") for t in text.split()]
    return " ".join(t for t in tokens if t)


def review_corpus(cache):
    sdist = fetch_pip("vaderSentiment==3.3.2", cache, sdist=True)
    outer = tarfile.open(sdist)
    inner_member = next(m for m in outer.getmembers()
                        if m.name.endswith("hutto_ICWSM_2014.tar.gz"))
    inner = tarfile.open(fileobj=outer.extractfile(inner_member))
    docs = []
    for name in ("amazonReviewSnippets_GroundTruth.txt",
                 "movieReviewSnippets_GroundTruth.txt"):
        member = next(m for m in inner.getmembers() if m.name.endswith(name))
        raw = inner.extractfile(member).read().decode("latin-1")
        for line in raw.splitlines():
            fields = line.split("\t", 2)
            if len(fields) == 3:
                docs.append(fields[2])
    npm = tarfile.open(fetch_npm("sentiment@5.0.2", cache))
    for name in ("amazon", "imdb", "yelp"):
        member = npm.getmember(f"package/test/fixtures/{name}.json")
        docs.extend(d["text"] for d in json.load(npm.extractfile(member)))
    normalized = (normalize_sentence(d) for d in docs)
    return [d for d in normalized if d]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="data")
    parser.add_argument("--cache", default="/tmp/typogen-sources")
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    cache = pathlib.Path(args.cache)
    cache.mkdir(parents=True, exist_ok=True)

    pairs = seed_pairs(cache)
    (out / "seed").mkdir(parents=True, exist_ok=True)
    with open(out / "seed" / "typo_pairs.tsv", "w") as f:
        f.writelines(f"{t}\t{c}\n" for t, c in pairs)
    sample = random.Random(20260101).sample(pairs, 500)
    with open(out / "seed" / "typo_pairs_sample500.tsv", "w") as f:
        f.writelines(f"{t}\t{c}\n" for t, c in sample)

    words = lexicon(cache)
    (out / "lexicon").mkdir(parents=True, exist_ok=True)
    with open(out / "lexicon" / "en_lexicon.tsv", "w") as f:
        f.writelines(f"{w}\t{c}\n" for w, c in words)

    docs = review_corpus(cache)
    (out / "corpus").mkdir(parents=True, exist_ok=True)
    with open(out / "corpus" / "reviews.txt", "w") as f:
        f.writelines(d + "\n" for d in docs)

    print(f"seed pairs: {len(pairs)}  lexicon: {len(words)}  documents: {len(docs)}")


if __name__ == "__main__":
    main()
