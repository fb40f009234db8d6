#!/usr/bin/env python3
"""Brute-force spread curve for a tweet id list; writes the golden CSV the
CLI `analyze spread --tweets` output is compared against.

Every event is scanned against every tweet in the set; no grouping or index.
"""
import argparse
import datetime as dt
import json
import pathlib

TOPICS = [
    "CONSPIRACY_THEORY",
    "GENERAL_MEDICAL_ADVICE",
    "PROMINENT_ACTORS",
    "COMMUNITY_SPREAD_AND_IMPACT",
    "PUBLIC_AUTHORITY_ACTION",
    "VIRUS_ORIGIN",
    "PUBLIC_PREPARATION",
    "OTHER",
]


def ts(s):
    return int(dt.datetime.strptime(s, "%Y-%m-%dT%H:%M:%SZ").replace(tzinfo=dt.timezone.utc).timestamp())


def records(path):
    for line in pathlib.Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        try:
            yield json.loads(line)
        except json.JSONDecodeError:
            continue


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tweets", required=True)
    ap.add_argument("--ids", required=True)
    ap.add_argument("--events", required=True)
    ap.add_argument("--topics", required=True)
    ap.add_argument("--bin-hours", type=int, default=4)
    ap.add_argument("--horizon-hours", type=int, default=36)
    ap.add_argument("--config-hash", default="")
    ap.add_argument("--out", required=True)
    a = ap.parse_args()

    ids = sorted({l.strip() for l in pathlib.Path(a.ids).read_text().splitlines() if l.strip()})
    created = {}
    for r in records(a.tweets):
        if "id" in r and "created_at" in r:
            created[str(r["id"])] = ts(r["created_at"])
    topics = {}
    for r in records(a.topics):
        if r.get("topic") in TOPICS:
            topics.setdefault(r["tweet_id"], set()).add(r["topic"])
    events = [(r["source_tweet_id"], ts(r["event_time"])) for r in records(a.events)]

    nb = a.horizon_hours // a.bin_hours
    bw = a.bin_hours * 3600
    hz = a.horizon_hours * 3600
    overall = [0] * nb
    weight = {t: 0.0 for t in TOPICS}
    totals = {t: [0.0] * nb for t in TOPICS}
    seen = set()
    for tid in ids:
        local = [0] * nb
        for src, when in events:
            if src != tid:
                continue
            d = when - created[tid]
            if 0 <= d < hz:
                local[d // bw] += 1
        for b in range(nb):
            overall[b] += local[b]
        ts_ = sorted(topics.get(tid, set()), key=TOPICS.index) or ["OTHER"]
        w = 1.0 / len(ts_)
        for t in ts_:
            seen.add(t)
            weight[t] += w
            for b in range(nb):
                totals[t][b] += w * float(local[b])

    lines = []
    if a.config_hash:
        lines.append("# config_hash: " + a.config_hash)
    lines.append("group,bin_start_hours,average")
    for b in range(nb):
        lines.append("ALL,%d,%.6f" % (b * a.bin_hours, overall[b] / len(ids) if ids else 0.0))
    for t in TOPICS:
        if t not in seen:
            continue
        for b in range(nb):
            avg = totals[t][b] / weight[t] if weight[t] > 0 else 0.0
            lines.append("%s,%d,%.6f" % (t, b * a.bin_hours, avg))
    pathlib.Path(a.out).write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
