#!/usr/bin/env python3
"""Generate the bundled synthetic bibliographic corpus.

Writes data/synthetic_corpus.jsonl (one JSON paper record per line) and
data/synthetic_spec.json (relevance + seed configuration). The output is
fully determined by --seed, so the committed files can be regenerated:

    python3 scripts/gen_synthetic_corpus.py --seed 2006 --papers 200

Structure of the corpus:
  * a handful of research groups, each with a senior author who co-signs
    most of the group's papers (hubs);
  * occasional cross-group papers linking seniors (so a giant component
    forms) and a few isolated groups that stay disconnected;
  * single-author papers;
  * a share of off-topic papers (databases, theory) that the relevance
    filter must drop, some co-signed by on-topic authors;
  * years 1994-2006, so only part of the corpus falls in the seed window.
"""

import argparse
import json
import random
from pathlib import Path

SURNAMES = [
    "Abbass", "Alba", "Back", "Banzhaf", "Beyer", "Branke", "Coello", "Cotta",
    "Deb", "Dorigo", "Eiben", "Fogarty", "Fogel", "Garis", "Goldberg", "Hansen",
    "Higuchi", "Iba", "Jong", "Kang", "Keijzer", "Keymeulen", "Koza", "Langdon",
    "Lutton", "Merelo", "Michalewicz", "Paechter", "Poli", "Rudolph", "Schoenauer",
    "Schwefel", "Smith", "Talbi", "Tomassini", "Vose", "Whitley", "Yao", "Zitzler",
    "Ochoa", "Nguyen", "Suzuki", "Tanaka", "Moreno", "Ruiz", "Ito", "Kim", "Lee",
]
INITIALS = "ABCDEFGHJKLMNPRSTWXYZ"

EC_VENUES = ["GECCO", "PPSN", "EuroGP", "EvoCOP", "EvoWorkshops", "CEC",
             "IEEE Trans. Evolutionary Computation", "Genetic Programming and Evolvable Machines"]
EC_TITLES = ["Genetic Programming for {}", "An Evolutionary Computation approach to {}",
             "Evolution Strategies on {}", "A Genetic Algorithm for {}",
             "Memetic search in {}", "Self-adaptation in {}"]
OFF_VENUES = ["SIGMOD", "VLDB", "STOC", "ICDE"]
OFF_TITLES = ["Query optimization for {}", "Indexing {}", "Lower bounds for {}"]
TOPICS = ["scheduling", "circuit design", "timetabling", "protein folding", "routing",
          "symbolic regression", "image filters", "robot control", "portfolio selection"]


def author_name(rng, used):
    while True:
        name = f"{rng.choice(INITIALS)}. {rng.choice(SURNAMES)}"
        if rng.random() < 0.2:
            name = f"{rng.choice(INITIALS)}.{rng.choice(INITIALS)}. {rng.choice(SURNAMES)}"
        if name not in used:
            used.add(name)
            return name


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=2006)
    ap.add_argument("--papers", type=int, default=200)
    ap.add_argument("--out-dir", type=Path, default=Path(__file__).resolve().parent.parent / "data")
    args = ap.parse_args()
    rng = random.Random(args.seed)

    used = set()
    groups = []
    for g in range(9):
        size = rng.randint(4, 9)
        groups.append([author_name(rng, used) for _ in range(size)])
    # One name with a comma to exercise CSV quoting.
    groups[0].append("de Garis, H.")

    records = []

    def add(title, venue, year, authors):
        records.append({"id": f"syn{len(records) + 1:04d}", "title": title, "venue": venue,
                        "year": year, "authors": authors})

    while len(records) < args.papers:
        roll = rng.random()
        year = rng.randint(1994, 2006)
        topic = rng.choice(TOPICS)
        if roll < 0.12:
            # Off-topic paper, sometimes co-signed by an EC author.
            g = rng.choice(groups)
            authors = rng.sample(g, k=min(len(g), rng.randint(1, 3)))
            title, venue = rng.choice(OFF_TITLES).format(topic), rng.choice(OFF_VENUES)
        elif roll < 0.20:
            # Cross-group collaboration between seniors; the last two
            # groups never collaborate, so they stay separate components.
            a, b = rng.sample(range(len(groups) - 2), 2)
            authors = [groups[a][0], groups[b][0]]
            if rng.random() < 0.5:
                authors.append(rng.choice(groups[b][1:]))
            title, venue = rng.choice(EC_TITLES).format(topic), rng.choice(EC_VENUES)
        elif roll < 0.27:
            authors = [rng.choice(rng.choice(groups))]
            title, venue = rng.choice(EC_TITLES).format(topic), rng.choice(EC_VENUES)
        else:
            g = rng.choice(groups)
            k = min(len(g) - 1, rng.choice([1, 1, 2, 2, 2, 3, 4]))
            authors = [g[0]] + rng.sample(g[1:], k)
            rng.shuffle(authors)
            title, venue = rng.choice(EC_TITLES).format(topic), rng.choice(EC_VENUES)
        add(title, venue, year, sorted(set(authors), key=authors.index))

    args.out_dir.mkdir(parents=True, exist_ok=True)
    with open(args.out_dir / "synthetic_corpus.jsonl", "w", encoding="utf-8") as f:
        for r in records:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")
    spec = {
        "keywords": ["Evolutionary Computation", "Genetic Programming", "Genetic Algorithm",
                     "Evolution Strategies", "Memetic"],
        "acronyms": ["GECCO", "PPSN", "EuroGP", "EvoCOP", "EvoWorkshops", "CEC"],
        "seed_venues": ["GECCO", "PPSN", "EuroGP", "EvoCOP", "EvoWorkshops"],
        "window_start": 2002,
        "window_end": 2006,
    }
    with open(args.out_dir / "synthetic_spec.json", "w", encoding="utf-8") as f:
        f.write(json.dumps(spec) + "\n")


if __name__ == "__main__":
    main()
