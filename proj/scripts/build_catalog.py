"""Build data/catalog.json from first principles.

Stage A constructs every group of degree <= 28 out of the binary Golay
code.  Stage B builds the 276-point Conway group Co3 from the McLaughlin
graph's regular two-graph and cuts the Higman-Sims tree out of it.  Heavy
group arithmetic (orders, stabilizers) is delegated to the compiled
jnt_groupcalc helper, so build the tools target first.

Usage: python3 build_catalog.py [--stage A|B|all] [--out PATH]
"""

import argparse
import json
import os
import sys
import time

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from permtools import Calc

HERE = os.path.dirname(os.path.abspath(__file__))
CACHE = os.path.join(HERE, "out")


def log(*args):
    print("[%7.1fs]" % (time.time() - START), *args, flush=True)


START = time.time()


def stage_a(calc):
    import build_small

    small = build_small.build(calc, verbose=log)
    os.makedirs(CACHE, exist_ok=True)
    keep = {k: v for k, v in small.items() if not k.startswith("_")}
    aux = {
        "m24": [list(g) for g in small["_m24"]],
        "m24_order": small["_m24_order"],
        "blocks23": [sorted(b) for b in small["_blocks23"]],
        "m23_24": [list(g) for g in small["_m23_24"]],
    }
    with open(os.path.join(CACHE, "stage_a.json"), "w") as f:
        json.dump({"entries": keep, "aux": aux}, f)
    log("stage A cached")
    return keep, aux


def load_stage_a():
    with open(os.path.join(CACHE, "stage_a.json")) as f:
        blob = json.load(f)
    return blob["entries"], blob["aux"]


def stage_b(calc, aux):
    import build_big

    big = build_big.build(calc, aux, verbose=log)
    with open(os.path.join(CACHE, "stage_b.json"), "w") as f:
        json.dump(big, f)
    log("stage B cached")
    return big


def load_stage_b():
    with open(os.path.join(CACHE, "stage_b.json")) as f:
        return json.load(f)


def assemble(small, big, out_path):
    order = [
        "L2_11", "A7", "M11_11", "M11_12", "M12", "M22", "M22_2", "M23",
        "M24", "PGammaL28",
    ]
    entries = [small[k] for k in order]
    entries.append(big["HS"])
    entries.append(big["Co3"])
    doc = {"entries": entries}
    os.makedirs(os.path.dirname(out_path), exist_ok=True)
    with open(out_path, "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")
    log("wrote", out_path)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--stage", choices=["A", "B", "all"], default="all")
    ap.add_argument(
        "--out", default=os.path.join(HERE, "..", "data", "catalog.json")
    )
    args = ap.parse_args()

    calc = Calc(os.path.join(CACHE, "scratch"))

    small = big = None
    if args.stage in ("A", "all"):
        small, aux = stage_a(calc)
    else:
        small, aux = load_stage_a()
        log("stage A loaded from cache")
    if args.stage in ("B", "all"):
        big = stage_b(calc, aux)
    elif args.stage == "A":
        try:
            big = load_stage_b()
        except FileNotFoundError:
            log("stage B not cached yet; catalog not written")
            return
    if big is None:
        big = load_stage_b()
    assemble(small, big, os.path.abspath(args.out))


if __name__ == "__main__":
    main()
