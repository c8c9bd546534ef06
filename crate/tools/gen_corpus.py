#!/usr/bin/env python3
"""Deterministic generator for the bundled training corpus.

Produces a directory of small synthetic Python modules. The files are not
meant to fool a reader; they exist so the toolkit can train and evaluate
offline on text with the statistical shape of source code: indentation,
keywords, operators, repeated idioms, and per-file identifier families.

Each file derives its identifiers from a file-unique tag, which keeps
cross-file line overlap low enough to survive the near-duplicate filter,
while the shared keyword/operator skeleton gives the subword trainer dense
pair statistics.

Usage: python3 tools/gen_corpus.py [out_dir]
"""

import random
import sys
from pathlib import Path

TAGS = [
    "amber", "birch", "cedar", "delta", "ember", "fjord", "gale", "heron",
    "iris", "jasper", "krill", "larch", "maple", "nectar", "onyx", "pearl",
    "quartz", "raven", "sable", "tundra", "umber", "violet", "willow", "xenon",
    "yarrow", "zephyr", "aspen", "basalt", "coral", "dune", "elm", "flint",
    "garnet", "hazel", "indigo", "juniper", "kelp", "lotus", "mica", "nimbus",
    "ochre", "pike", "quill", "reed", "slate", "topaz", "ursa", "vale",
    "wren", "yew", "zinc", "alder", "brook", "cliff", "drift", "eddy",
    "fern", "glen", "holly", "inlet", "jade", "knoll", "lagoon", "marsh",
    "north", "oak", "pond", "quince", "ridge", "stone", "thorn", "upland",
    "vine", "wharf", "yonder", "zeal", "arbor", "bluff", "cove", "dale",
    "estuary", "forge", "grove", "harbor",
]

DOMAINS = [
    ("queue", ["job", "slot", "worker", "ticket", "deadline", "batch"]),
    ("matrix", ["row", "col", "cell", "pivot", "trace", "rank"]),
    ("parser", ["token", "node", "rule", "cursor", "depth", "scope"]),
    ("cache", ["key", "entry", "bucket", "hit", "miss", "epoch"]),
    ("graph", ["edge", "vertex", "path", "weight", "visited", "frontier"]),
    ("ledger", ["account", "balance", "debit", "credit", "entry", "period"]),
    ("stream", ["chunk", "offset", "frame", "window", "cursor", "tail"]),
    ("index", ["term", "posting", "doc", "score", "shard", "segment"]),
    ("timer", ["tick", "interval", "elapsed", "budget", "phase", "slack"]),
    ("pool", ["handle", "lease", "capacity", "idle", "active", "limit"]),
    ("router", ["route", "hop", "prefix", "metric", "table", "peer"]),
    ("planner", ["task", "step", "cost", "plan", "branch", "bound"]),
]

IMPORT_POOL = [
    "import math",
    "import json",
    "import os",
    "import sys",
    "import itertools",
    "from collections import deque",
    "from collections import defaultdict",
]


def ident(noun, tag):
    return f"{noun}_{tag}"


def make_function(rng, tag, nouns, name):
    a = ident(rng.choice(nouns), tag)
    b = ident(rng.choice(nouns), tag)
    total = ident("total", tag)
    count = ident("count", tag)
    lines = []
    args = ", ".join(sorted({a, b}))
    lines.append(f"def {name}({args}):")
    lines.append(f'    """Fold {a} into a running tally."""')
    lines.append(f"    {total} = 0")
    lines.append(f"    {count} = 0")
    lines.append(f"    for item_{tag} in {a}:")
    branch = rng.randrange(5)
    if branch == 0:
        lines.append(f"        if item_{tag} == 0:")
        lines.append(f"            {count} += 1")
        lines.append("            continue")
        lines.append(f"        {total} += item_{tag} + {rng.randrange(2, 9)}")
    elif branch == 1:
        lines.append(f"        if item_{tag} % {rng.randrange(2, 7)} == 0:")
        lines.append(f"            {total} += item_{tag} * 2")
        lines.append("        else:")
        lines.append(f"            {total} -= item_{tag}")
    elif branch == 2:
        lines.append(f"        while item_{tag} > {rng.randrange(1, 5)}:")
        lines.append(f"            item_{tag} -= 1")
        lines.append(f"            {count} += 1")
        lines.append(f"        {total} += item_{tag}")
    elif branch == 3:
        lines.append(f"        {count} += 1")
        lines.append(f"        if {count} > len({b}):")
        lines.append("            break")
        lines.append(f"        {total} += item_{tag} + {count}")
    else:
        lines.append(f"        x = item_{tag}")
        lines.append("        x = x + 3 if x == 0 else x")
        lines.append(f"        {total} += x")
    if rng.random() < 0.5:
        lines.append(f"    if {total} == 0:")
        lines.append(f'        print("empty {name}", {count})')
        lines.append("        return None")
    lines.append(f"    print({total}, {count})")
    lines.append(f"    return {total}")
    lines.append("")
    lines.append("")
    return lines


def make_class(rng, tag, domain, nouns, suffix):
    cls = f"{domain.capitalize()}{suffix}{tag.capitalize()}"
    state, other_noun = rng.sample(nouns, 2)
    state = ident(state, tag)
    other = ident(other_noun, tag)
    limit = ident("limit", tag)
    lines = [f"class {cls}:"]
    lines.append(f'    """Tracks {state} for the {tag} {domain}."""')
    lines.append("")
    lines.append(f"    def __init__(self, {limit}):")
    lines.append(f"        self.{state} = []")
    lines.append(f"        self.{limit} = {limit}")
    lines.append(f"        self.{other} = 0")
    lines.append("")
    lines.append(f"    def push_{tag}(self, value):")
    lines.append(f"        if len(self.{state}) >= self.{limit}:")
    lines.append(f'            raise ValueError("{cls} is full")')
    lines.append(f"        self.{state}.append(value)")
    lines.append(f"        self.{other} += value")
    lines.append("")
    lines.append(f"    def drain_{tag}(self):")
    lines.append(f"        while self.{state}:")
    lines.append(f"            value = self.{state}.pop()")
    lines.append(f"            if value == 0:")
    lines.append(f"                print(\"skipping zero in {cls}\")")
    lines.append("                continue")
    lines.append(f"            self.{other} -= value")
    lines.append(f"            yield value")
    lines.append("")
    lines.append(f"    def report_{tag}(self):")
    lines.append(f"        print(len(self.{state}), self.{other})")
    lines.append(f"        return self.{other}")
    lines.append("")
    lines.append("")
    return lines


def make_main(rng, tag, nouns, func_names, cls_names):
    items = ident(rng.choice(nouns), tag)
    lines = ['if __name__ == "__main__":']
    lines.append(f"    {items} = [{', '.join(str(rng.randrange(0, 30)) for _ in range(8))}]")
    obj = f"box_{tag}"
    lines.append(f"    {obj} = {cls_names[0]}({rng.randrange(4, 40)})")
    lines.append(f"    for seed_{tag} in {items}:")
    lines.append(f"        {obj}.push_{tag}(seed_{tag} + 3 if seed_{tag} == 0 else seed_{tag})")
    for name in func_names[: rng.randrange(2, 4)]:
        lines.append(f"    print({name}({items}, {items}))")
    lines.append(f"    {obj}.report_{tag}()")
    lines.append(f'    print("done", "{tag}")')
    lines.append("")
    return lines


def make_file(index, tag):
    rng = random.Random(9000 + index)
    domain, nouns = DOMAINS[index % len(DOMAINS)]
    lines = [f'"""Generated {domain} helpers ({tag} family)."""', ""]
    for imp in sorted(rng.sample(IMPORT_POOL, rng.randrange(2, 5))):
        lines.append(imp)
    lines.append("")
    lines.append(f"LIMIT_{tag.upper()} = {rng.randrange(8, 200)}")
    lines.append(f"SCALE_{tag.upper()} = {rng.randrange(2, 12)}")
    lines.append("")
    lines.append("")
    cls_names = []
    for suffix in ("Board", "Log"):
        block = make_class(rng, tag, domain, nouns, suffix)
        cls_names.append(block[0].split()[1].rstrip(":"))
        lines.extend(block)
    func_names = []
    target_funcs = rng.randrange(28, 36)
    for k in range(target_funcs):
        name = f"{rng.choice(['fold', 'scan', 'merge', 'weigh', 'settle', 'probe'])}_{rng.choice(nouns)}_{tag}_{k}"
        func_names.append(name)
        lines.extend(make_function(rng, tag, nouns, name))
    lines.extend(make_main(rng, tag, nouns, func_names, cls_names))
    return "\n".join(lines) + "\n"


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data/corpus")
    out.mkdir(parents=True, exist_ok=True)
    total = 0
    for i, tag in enumerate(TAGS):
        text = make_file(i, tag)
        total += len(text)
        (out / f"{tag}_{DOMAINS[i % len(DOMAINS)][0]}.py").write_text(text)
    print(f"{len(TAGS)} files, {total} bytes -> {out}")


if __name__ == "__main__":
    main()
