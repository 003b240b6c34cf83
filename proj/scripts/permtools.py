"""Permutation plumbing shared by the catalog build scripts.

Conventions match the C++ core: a permutation on n points is a tuple of
0-based images, and compose(p, q) means "apply p first, then q".  All JSON
written for the jnt_groupcalc helper uses 1-based image arrays.
"""

import json
import os
import subprocess

GROUPCALC = os.environ.get(
    "JNT_GROUPCALC",
    os.path.join(os.path.dirname(__file__), "..", "build", "tools", "jnt_groupcalc"),
)


def compose(p, q):
    return tuple(q[p[i]] for i in range(len(p)))


def inverse(p):
    out = [0] * len(p)
    for i, ip in enumerate(p):
        out[ip] = i
    return tuple(out)


def identity(n):
    return tuple(range(n))


def perm_order(p):
    n = 1
    q = p
    ident = identity(len(p))
    while q != ident:
        q = compose(q, p)
        n += 1
    return n


def image_of_set(p, s):
    return frozenset(p[x] for x in s)


def closure(gens, limit=None):
    """All elements generated by `gens` (BFS).  Only for small groups."""
    ident = identity(len(gens[0]))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                f = compose(e, g)
                if f not in seen:
                    seen.add(f)
                    nxt.append(f)
                    if limit is not None and len(seen) > limit:
                        raise RuntimeError("closure exceeded limit %d" % limit)
        frontier = nxt
    return seen


def set_orbit_transporter(gens, seed, target):
    """BFS the orbit of frozenset `seed`; return a group element mapping
    seed to `target` (or None if target is not reached)."""
    n = len(gens[0])
    ident = identity(n)
    words = {seed: ident}
    frontier = [seed]
    while frontier:
        nxt = []
        for s in frontier:
            w = words[s]
            for g in gens:
                img = image_of_set(g, s)
                if img not in words:
                    words[img] = compose(w, g)
                    if img == target:
                        return words[img]
                    nxt.append(img)
        frontier = nxt
    return words.get(target)


def tuple_orbit_transporter(gens, seed, target):
    """Same as set_orbit_transporter but for ordered tuples of points."""
    n = len(gens[0])
    ident = identity(n)
    words = {seed: ident}
    frontier = [seed]
    while frontier:
        nxt = []
        for s in frontier:
            w = words[s]
            for g in gens:
                img = tuple(g[x] for x in s)
                if img not in words:
                    words[img] = compose(w, g)
                    if img == target:
                        return words[img]
                    nxt.append(img)
        frontier = nxt
    return words.get(target)


def restrict(p, points):
    """Restriction of p to an invariant point set, relabelled 0..len-1."""
    pts = sorted(points)
    index = {x: i for i, x in enumerate(pts)}
    for x in pts:
        if p[x] not in index:
            raise ValueError("point set not invariant under permutation")
    return tuple(index[p[x]] for x in pts)


def restrict_all(gens, points):
    return [restrict(g, points) for g in gens]


# ---------------------------------------------------------------------------
# jnt_groupcalc subprocess wrapper


def _write_json(path, obj):
    with open(path, "w") as f:
        json.dump(obj, f)


def _group_spec(gens, order=None):
    spec = {
        "degree": len(gens[0]),
        "generators": [[i + 1 for i in g] for g in gens],
    }
    if order is not None:
        spec["order"] = str(order)
    return spec


class Calc:
    """Wrapper around the jnt_groupcalc binary with a scratch directory."""

    def __init__(self, scratch):
        self.scratch = scratch
        os.makedirs(scratch, exist_ok=True)
        self._n = 0

    def _tmp(self, name):
        self._n += 1
        return os.path.join(self.scratch, "%03d_%s.json" % (self._n, name))

    def _run(self, *args):
        res = subprocess.run(
            [GROUPCALC] + list(args), capture_output=True, text=True, check=False
        )
        if res.returncode != 0:
            raise RuntimeError(
                "jnt_groupcalc %s failed: %s" % (" ".join(args), res.stderr.strip())
            )
        return json.loads(res.stdout)

    def order(self, gens):
        path = self._tmp("grp")
        _write_json(path, _group_spec(gens))
        return int(self._run("order", path)["order"])

    def orbit_sizes(self, gens):
        path = self._tmp("grp")
        _write_json(path, _group_spec(gens))
        return sorted(self._run("orbits", path)["orbit_sizes"])

    def point_stab(self, gens, point0, order=None):
        """Stabilizer of 0-based `point0`; returns (gens, order)."""
        path = self._tmp("grp")
        _write_json(path, _group_spec(gens, order))
        out = self._run("point-stab", path, str(point0 + 1))
        sgens = [tuple(i - 1 for i in g) for g in out["generators"]]
        return sgens, int(out["order"])

    def orbit_stab(self, gens, order, points0):
        """Setwise stabilizer of the 0-based point set; returns
        (stab_gens, stab_order, orbit_size)."""
        gpath = self._tmp("grp")
        _write_json(gpath, _group_spec(gens, order))
        spath = self._tmp("set")
        _write_json(spath, {"points": [p + 1 for p in sorted(points0)]})
        out = self._run("orbit-stab", gpath, spath)
        sgens = [tuple(i - 1 for i in g) for g in out["stab_generators"]]
        return sgens, int(out["stab_order"]), int(out["orbit_size"])

    def contains(self, gens, perms):
        gpath = self._tmp("grp")
        _write_json(gpath, _group_spec(gens))
        ppath = self._tmp("perms")
        _write_json(ppath, {"perms": [[i + 1 for i in p] for p in perms]})
        return self._run("contains", gpath, ppath)["contains"]

    def centralizer(self, gens, order, elem):
        gpath = self._tmp("grp")
        _write_json(gpath, _group_spec(gens, order))
        epath = self._tmp("elem")
        _write_json(epath, {"images": [i + 1 for i in elem]})
        out = self._run("centralizer", gpath, epath)
        cgens = [tuple(i - 1 for i in g) for g in out["centralizer_generators"]]
        return cgens, int(out["centralizer_order"])


# ---------------------------------------------------------------------------
# catalog entry assembly


def entry(name, gens, order, two_transitive, children=()):
    return {
        "name": name,
        "degree": len(gens[0]),
        "order": str(order),
        "two_transitive": two_transitive,
        "generators": [[i + 1 for i in g] for g in gens],
        "maximal_subgroups": sorted(
            children, key=lambda c: (-int(c["order"]), c["name"])
        ),
    }


def check_2transitive(calc, gens, order):
    """Transitive with point stabilizer transitive on the rest."""
    deg = len(gens[0])
    if calc.orbit_sizes(gens) != [deg]:
        return False
    sgens, _ = calc.point_stab(gens, 0, order)
    sizes = calc.orbit_sizes(sgens)
    return sizes == sorted([1, deg - 1])
