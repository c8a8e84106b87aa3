#!/usr/bin/env python3
"""Regenerates data/fixtures/*.json from the figure coordinates."""
import json
import math
import pathlib

OUT = pathlib.Path(__file__).resolve().parents[2] / "data" / "fixtures"


def doc(norm, pts, edges, group=None, options=None):
    d = {"norm": norm,
         "vertices": [{"id": k, "point": v} for k, v in pts.items()],
         "edges": [list(e) for e in edges]}
    if group:
        d["group"] = group
    d["options"] = options or {"backend": "exact"}
    return d


def pairs(s):
    return [tuple(x.split("-")) for x in s.split()]


fixtures = {}

fixtures["fig1a"] = doc("linf2", {
    "p1": ["0", "0.6"], "p2": ["-1", "0"], "p3": ["1", "0"],
    "p4": ["-1.2", "-0.8"], "p6": ["1.2", "-0.8"]},
    pairs("p1-p2 p1-p3 p1-p4 p1-p6 p2-p4 p3-p6 p4-p3 p6-p2"),
    {"builtin": "cs", "theta": {"s": {"p2": "p3", "p3": "p2", "p4": "p6", "p6": "p4"}}})

fixtures["fig1b"] = doc("linf2", {
    "p1": ["0.6", "0.6"], "p2": ["-0.6", "0.7"], "p3": ["-0.9", "0.2"],
    "p4": ["0.7", "-0.6"], "p5": ["0.2", "-0.9"], "p6": ["-0.6", "-0.6"]},
    pairs("p1-p2 p1-p3 p1-p4 p1-p5 p2-p3 p4-p5 p2-p5 p4-p3 p6-p3 p6-p5"),
    {"builtin": "cs_diag", "theta": {"s": {"p2": "p4", "p4": "p2", "p3": "p5", "p5": "p3"}}})

fixtures["fig1c"] = doc("linf2", {
    "p1": ["-0.8", "0.2"], "p2": ["0.8", "-0.2"], "p3": ["-0.4", "-0.6"], "p4": ["0.4", "0.6"]},
    pairs("p1-p2 p1-p3 p1-p4 p2-p4 p3-p4 p3-p2"),
    {"builtin": "c2", "theta": {"r": {"p1": "p2", "p2": "p1", "p3": "p4", "p4": "p3"}}})

# polar positions rounded to three decimals, then rotated exactly
a, b = "0.205", "0.564"   # 0.6 at 70 degrees
o = "0.636"               # 0.9 at 45 degrees
neg = lambda s: s[1:] if s.startswith("-") else "-" + s
fixtures["fig1d"] = doc("linf2", {
    "p1": [a, b], "p2": [neg(b), a], "p3": [neg(a), neg(b)], "p4": [b, neg(a)], "c": ["0", "0"],
    "o1": [o, o], "o2": [neg(o), o], "o3": [neg(o), neg(o)], "o4": [o, neg(o)]},
    pairs("p1-p2 p2-p3 p3-p4 p1-p4 c-p1 c-p2 c-p3 c-p4 o1-p1 o1-p4 o2-p1 o2-p2 o3-p2 o3-p3 o4-p3 o4-p4"),
    {"builtin": "c4", "theta": {"r": {"p1": "p2", "p2": "p3", "p3": "p4", "p4": "p1",
                                      "o1": "o2", "o2": "o3", "o3": "o4", "o4": "o1"}}})

fixtures["fig1e"] = doc("linf2", {
    "p1": ["0", "0"], "p2": ["-0.3", "0.5"], "p22": ["0.3", "0.5"], "p3": ["-0.3", "-0.5"],
    "p33": ["0.3", "-0.5"], "p4": ["-1.2", "0.65"], "p44": ["1.2", "0.65"],
    "p5": ["-1.2", "-0.65"], "p55": ["1.2", "-0.65"]},
    pairs("p1-p2 p1-p22 p1-p3 p1-p33 p1-p4 p1-p44 p1-p5 p1-p55 p2-p5 p3-p4 p3-p5 p2-p4 "
          "p22-p55 p33-p44 p33-p55 p22-p44"),
    {"builtin": "c2v", "theta": {
        "r": {"p2": "p33", "p33": "p2", "p22": "p3", "p3": "p22",
              "p4": "p55", "p55": "p4", "p44": "p5", "p5": "p44"},
        "s": {"p2": "p3", "p3": "p2", "p22": "p33", "p33": "p22",
              "p4": "p5", "p5": "p4", "p44": "p55", "p55": "p44"}}})

c, s = "0.274", "0.752"   # 0.8 at 70 degrees
f_pts = {"p1": ["0", "0"],
         "p2": [c, s], "p22": [neg(c), s], "p3": [neg(s), c], "p33": [neg(s), neg(c)],
         "p4": [neg(c), neg(s)], "p44": [c, neg(s)], "p5": [s, neg(c)], "p55": [s, c]}
fixtures["fig1f"] = doc("linf2", f_pts,
    pairs("p1-p2 p1-p22 p1-p3 p1-p33 p1-p4 p1-p44 p1-p5 p1-p55 p22-p33 p3-p4 p33-p44 p5-p4 "
          "p44-p55 p5-p2 p55-p22 p2-p3"),
    {"builtin": "c4v", "theta": {
        "r": {"p2": "p3", "p3": "p4", "p4": "p5", "p5": "p2",
              "p22": "p33", "p33": "p44", "p44": "p55", "p55": "p22"},
        "s": {"p2": "p44", "p44": "p2", "p22": "p4", "p4": "p22",
              "p3": "p33", "p33": "p3", "p5": "p55", "p55": "p5"}}})

fig3_edges = pairs("p1-p2 p1-p3 p1-p4 p2-p3 p2-p4 p3-p4 p11-p22 p11-p33 p11-p44 p22-p33 p22-p44 "
                   "p33-p44 p3-p44 p4-p33")
swap = {"p1": "p11", "p2": "p22", "p3": "p33", "p4": "p44"}
swap.update({v: k for k, v in list(swap.items())})
fixtures["fig3a"] = doc("linf2", {
    "p1": ["-1.3", "-0.2"], "p2": ["-1.3", "0.4"], "p3": ["-0.6", "-0.4"], "p4": ["-0.6", "0.3"],
    "p11": ["1.3", "-0.2"], "p22": ["1.3", "0.4"], "p33": ["0.6", "-0.4"], "p44": ["0.6", "0.3"]},
    fig3_edges, {"builtin": "cs", "theta": {"s": swap}})
fixtures["fig3b"] = doc("linf2", {
    "p1": ["-1.3", "-0.2"], "p2": ["-1.3", "0.4"], "p3": ["-0.6", "-0.4"], "p4": ["-0.6", "0.3"],
    "p11": ["1.3", "0.2"], "p22": ["1.3", "-0.4"], "p33": ["0.6", "0.4"], "p44": ["0.6", "-0.3"]},
    fig3_edges, {"builtin": "c2", "theta": {"r": swap}})
fixtures["fig3c"] = doc("linf2", {
    "p1": ["-1.1", "0"], "p2": ["-1", "0.9"], "p3": ["-0.4", "0"], "p4": ["-0.3", "0.6"],
    "p11": ["0", "-1.1"], "p22": ["0.9", "-1"], "p33": ["0", "-0.4"], "p44": ["0.6", "-0.3"]},
    fig3_edges, {"builtin": "cs_diag", "theta": {"s": swap}})

# 3D: orbit of v1, v1' under rotation about z (v_{j+1} = R v_j) and the xy-mirror (w_j = s v_j)
def rot(p, k):
    t = 2 * math.pi * k / 3
    x, y, z = p
    return [x * math.cos(t) - y * math.sin(t), x * math.sin(t) + y * math.cos(t), z]

v1, v1p = [-0.25, -1.0, 0.25], [-0.25, -1.0, 1.5]
pts = {"o": [0.0, 0.0, 0.0]}
for j in range(3):
    pts[f"v{j+1}"] = rot(v1, j)
for j in range(3):
    pts[f"v{j+1}'"] = rot(v1p, j)
for j in range(3):
    x, y, z = rot(v1, j); pts[f"w{j+1}"] = [x, y, -z]
for j in range(3):
    x, y, z = rot(v1p, j); pts[f"w{j+1}'"] = [x, y, -z]
pts = {k: [round(c, 15) + 0.0 for c in v] for k, v in pts.items()}
e3 = []
for grp in ("v", "v'", "w", "w'"):
    base, prime = grp[0], grp[1:]
    e3 += [(f"{base}1{prime}", f"{base}2{prime}"), (f"{base}2{prime}", f"{base}3{prime}"),
           (f"{base}1{prime}", f"{base}3{prime}")]
for j in range(1, 4):
    e3 += [(f"v{j}", f"v{j}'"), (f"w{j}", f"w{j}'")]
e3 += [("v1", "w3'"), ("w1", "v3'"), ("v2", "w1'"), ("w2", "v1'"), ("v3", "w2'"), ("w3", "v2'")]
e3 += [("o", k) for k in pts if k != "o"]
r_map, s_map = {}, {}
for base in ("v", "w"):
    for prime in ("", "'"):
        for j in range(1, 4):
            r_map[f"{base}{j}{prime}"] = f"{base}{j % 3 + 1}{prime}"
for j in range(1, 4):
    for prime in ("", "'"):
        s_map[f"v{j}{prime}"] = f"w{j}{prime}"
        s_map[f"w{j}{prime}"] = f"v{j}{prime}"
fixtures["example3d"] = doc("hexprism3", pts, e3,
    {"builtin": "c3h", "theta": {"r": r_map, "s": s_map}},
    {"backend": "float", "tolerance": 1e-9})

OUT.mkdir(parents=True, exist_ok=True)
for name, d in fixtures.items():
    (OUT / f"{name}.json").write_text(json.dumps(d, indent=2) + "\n")
print("wrote", len(fixtures), "fixtures to", OUT)
