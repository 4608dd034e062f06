"""Stand-alone validator speaking the line protocol; shares no code with relacheck."""

import json
import sys
from collections import Counter


def sort_valid(lst, srt):
    key = lambda p: (p["name"], p["age"])
    if Counter(map(key, lst)) != Counter(map(key, srt)):
        return False
    return all(a["age"] <= b["age"] for a, b in zip(srt, srt[1:]))


def match_valid(inp, match):
    cand, comp = inp["candidate_prefs"], inp["company_prefs"]
    n = len(cand)
    pairs = {tuple(p) for p in match}
    cs = [c for c, _ in pairs]
    ks = [k for _, k in pairs]
    if len(set(cs)) != len(cs) or len(set(ks)) != len(ks):
        return False
    if set(cs) != set(range(n)) or set(ks) != set(range(n)):
        return False
    partner_of_cand = dict(pairs)
    partner_of_comp = {k: c for c, k in pairs}
    for c in range(n):
        for k in range(n):
            if partner_of_cand[c] == k:
                continue
            if cand[c].index(k) < cand[c].index(partner_of_cand[c]) and comp[k].index(c) < comp[k].index(partner_of_comp[k]):
                return False
    return True


def topo_valid(inp, srt):
    if set(srt) != set(inp["vertices"]) or len(set(srt)) != len(srt):
        return False
    pos = {v: i for i, v in enumerate(srt)}
    return all(pos[u] < pos[v] for u, v in inp["edges"])


CHECK = {
    "sort": lambda r: sort_valid(r["input"], r["output"]),
    "match": lambda r: match_valid(r["input"], r["output"]),
    "toposort": lambda r: topo_valid(r["input"], r["output"]),
}

for line in sys.stdin:
    request = json.loads(line)
    print(json.dumps({"valid": CHECK[request["problem"]](request)}), flush=True)
