#!/usr/bin/env python3
"""Writes the synthetic test fixture under tests/fixtures/.

Everything is derived from one seeded RNG, so re-running reproduces the
committed files byte for byte.
"""
import argparse
import datetime as dt
import json
import pathlib
import random

ROOT = pathlib.Path(__file__).resolve().parent.parent

# (text, topic, debunk date, fact checker)
CLAIMS = [
    ("Drinking hot water with lemon cures the coronavirus infection", "GENERAL_MEDICAL_ADVICE", "2020-03-20", "AFP"),
    ("5G towers spread the coronavirus through radio waves", "CONSPIRACY_THEORY", "2020-04-08", "FullFact"),
    ("Bill Gates plans to implant microchips through the covid vaccine", "CONSPIRACY_THEORY", "2020-05-15", "PolitiFact"),
    ("The coronavirus was engineered in a laboratory in Wuhan", "VIRUS_ORIGIN", "2020-02-20", "Snopes"),
    ("Gargling salt water kills the virus in the throat", "GENERAL_MEDICAL_ADVICE", "2020-03-25", "AFP"),
    ("Face masks cause oxygen deficiency and carbon dioxide poisoning", "GENERAL_MEDICAL_ADVICE", "2020-06-10", "Reuters"),
    ("Hydroxychloroquine is a proven cure for covid patients", "GENERAL_MEDICAL_ADVICE", "2020-04-20", "PolitiFact"),
    ("The government will impose martial law and close all supermarkets", "PUBLIC_AUTHORITY_ACTION", "2020-03-18", "FullFact"),
    ("Drinking bleach protects people from the coronavirus", "GENERAL_MEDICAL_ADVICE", "2020-04-25", "Reuters"),
    ("Tom Hanks was arrested after testing positive for coronavirus", "PROMINENT_ACTORS", "2020-03-30", "Snopes"),
    ("Hospitals receive money for every covid death certificate", "CONSPIRACY_THEORY", "2020-04-12", "PolitiFact"),
    ("Bananas prevent coronavirus infection according to scientists", "GENERAL_MEDICAL_ADVICE", "2020-05-02", "AFP"),
    ("Hand sanitizer bottles left in hot cars explode in summer heat", "PUBLIC_PREPARATION", "2020-05-20", "Snopes"),
    ("The pandemic was planned by pharmaceutical companies for profit", "CONSPIRACY_THEORY", "2020-06-01", "Reuters"),
    ("Mosquito bites transmit the coronavirus between humans", "COMMUNITY_SPREAD_AND_IMPACT", "2020-04-02", "AFP"),
    ("Helicopters will spray disinfectant over cities at night", "PUBLIC_AUTHORITY_ACTION", "2020-03-28", "FullFact"),
    ("Stocking toilet paper protects families during lockdown", "PUBLIC_PREPARATION", "2020-03-15", "Snopes"),
    ("Children cannot catch or spread the coronavirus", "COMMUNITY_SPREAD_AND_IMPACT", "2020-07-10", "Reuters"),
    ("Snake soup from a Wuhan market started the coronavirus outbreak", "VIRUS_ORIGIN", "2020-02-28", "AFP"),
    ("Alcohol sales will be banned nationwide during the covid lockdown", "OTHER", "2020-04-15", "FullFact"),
]

HASHTAGS = ["#covid19", "#coronavirus", "#covid", "#pandemic", "#lockdown", "#sarscov2", "#covid_19"]

FILLER_WORDS = (
    "people stay home today news update cases report city hospital doctors nurses family friends work school "
    "week weekend morning evening shop store queue line mask test results numbers daily briefing minister "
    "health officials local community support thanks safe careful travel flight border rules guidance "
    "vaccine trial research study data chart graph curve peak wave second first new latest live video photo "
    "kitchen garden walk park dog cat music movie book coffee tea bread pasta rice delivery online meeting "
    "zoom call parents kids teachers students exam holiday summer spring winter autumn rain sun weather"
).split()

CLAIM_NOISE = "really honestly apparently seriously wow crazy insane unbelievable shocking breaking".split()

FIRST_ID = 1250000000000000000


def tweet_id(n):
    return str(FIRST_ID + n * 7919)


def iso(ts):
    return ts.strftime("%Y-%m-%dT%H:%M:%SZ")


def slug(text):
    return "-".join(text.lower().split()[:6])


class Builder:
    def __init__(self, seed):
        self.rng = random.Random(seed)
        self.tweets = []  # dicts in creation order
        self.extra_records = []  # retweets/quotes/malformed raw lines
        self.status = {}
        self.topic_of = {}
        self.next_n = 0
        self.start = dt.datetime(2020, 1, 1, tzinfo=dt.timezone.utc)

    def new_id(self):
        n = self.next_n
        self.next_n += 1
        return tweet_id(n)

    def rand_time(self, lo_day=0, hi_day=365):
        day = self.rng.randint(lo_day, hi_day - 1)
        sec = self.rng.randint(0, 86399)
        return self.start + dt.timedelta(days=day, seconds=sec)

    def add(self, text, when, handle=None, urls=None, topics=None, status=None):
        tid = self.new_id()
        handle = handle or f"user{self.rng.randint(1, 400)}"
        rec = {
            "id": tid,
            "text": text,
            "author_id": f"a_{handle.lower()}",
            "author_handle": handle,
            "created_at": iso(when),
        }
        if urls:
            rec["urls"] = urls
        self.tweets.append(rec)
        if status:
            self.status[tid] = status
        if topics:
            self.topic_of[tid] = topics
        return tid


def claim_url(i, text):
    return f"https://www.poynter.org/?ifcn_misinformation={slug(text)}-{i:02d}"


def build(seed):
    b = Builder(seed)
    rng = b.rng
    claims = []
    for i, (text, topic, date, checker) in enumerate(CLAIMS):
        claims.append({
            "id": f"C{i + 1:03d}",
            "text": text,
            "debunk_date": date,
            "topic": topic,
            "fact_checker": checker,
            "debunk_url": claim_url(i + 1, text),
        })

    planted = []  # tweet ids planted as likely misinformation
    for i, c in enumerate(claims):
        d = dt.datetime.fromisoformat(c["debunk_date"]).replace(tzinfo=dt.timezone.utc)
        words = c["text"].split()
        tag = HASHTAGS[i % len(HASHTAGS)]

        def at(offset_days):
            return d + dt.timedelta(days=offset_days, seconds=rng.randint(0, 86399))

        # verbatim with a keyword hashtag inside the window
        planted.append(b.add(f"{c['text']} {tag}", at(-rng.randint(1, 60)), topics=[c["topic"]],
                             status=rng.choice([None, "TWEET_DELETED", "ACCOUNT_SUSPENDED"])))
        # verbatim where the hashtag replaces a claim word already present (all tokens shared)
        if "coronavirus" in words:
            t = c["text"].replace("coronavirus", "#coronavirus", 1)
            planted.append(b.add(t, at(-rng.randint(1, 30)), topics=[c["topic"]], status="ACCOUNT_SUSPENDED"))
        # light paraphrase: one noise word, one claim word dropped
        w = list(words)
        del w[rng.randrange(len(w))]
        w.insert(rng.randrange(len(w) + 1), rng.choice(CLAIM_NOISE))
        planted.append(b.add(" ".join(w) + f" {tag}", at(rng.randint(-50, 10)), topics=[c["topic"]],
                             status=rng.choice([None, None, "TWEET_DELETED", "ACCOUNT_DELETED"])))
        # verbatim but far before the window
        b.add(f"{c['text']} {tag}", at(-rng.randint(75, 90)), topics=[c["topic"]])
        # verbatim but after the window
        b.add(f"{c['text']} {tag}", at(rng.randint(16, 40)), topics=[c["topic"]])
        # debunk inside the window, linking the claim's fact check
        b.add(f"Fact check: claims that {c['text'][0].lower() + c['text'][1:]} are false {tag}",
              at(rng.randint(-5, 10)), urls=[c["debunk_url"]], topics=[c["topic"]])
        # weak overlap (irrelevant)
        b.add(f"{words[0]} {' '.join(rng.sample(FILLER_WORDS, 6))} {tag}", at(rng.randint(-30, 5)),
              topics=[c["topic"]])
        # credible account repeating the claim (quoting it to warn)
        if i % 4 == 0:
            handle = ["WHO", "AFP", "UN", "wef", "EMRO"][i // 4]
            b.add(f"{c['text']} {tag}", at(-rng.randint(1, 20)), handle=handle, topics=[c["topic"]],
                  status="TWEET_DELETED" if i % 8 == 0 else None)

    # a tweet matching two claims of different topics
    both = b.add("Bill Gates plans to implant microchips through the covid vaccine and 5G towers spread the "
                 "coronavirus through radio waves #5g", dt.datetime(2020, 4, 20, 9, 0, tzinfo=dt.timezone.utc),
                 topics=["CONSPIRACY_THEORY", "VIRUS_ORIGIN"])
    planted.append(both)

    # filler
    while len(b.tweets) < 1000:
        n = rng.randint(6, 14)
        words = rng.sample(FILLER_WORDS, n)
        if rng.random() < 0.15:
            cw = rng.choice(CLAIMS)[0].split()
            words[rng.randrange(n)] = rng.choice(cw).lower()
        tag = rng.choice(HASHTAGS)
        text = " ".join(words) + f" {tag}"
        topic = rng.choice(["COMMUNITY_SPREAD_AND_IMPACT", "PUBLIC_PREPARATION", "OTHER", "PUBLIC_AUTHORITY_ACTION"])
        status = rng.choices([None, "TWEET_DELETED", "ACCOUNT_SUSPENDED", "ACCOUNT_DELETED", "OTHER"],
                             weights=[90, 4, 3, 2, 1])[0]
        b.add(text, b.rand_time(), topics=[topic], status=status)

    # off-topic tweets rejected by the keyword filter
    off_topic = []
    for _ in range(20):
        off_topic.append(b.add(" ".join(rng.sample(FILLER_WORDS, 8)), b.rand_time()))

    by_id = {t["id"]: t for t in b.tweets}
    source_ids = [t["id"] for t in b.tweets if t["id"] not in set(off_topic)]

    # spread events
    events = []
    for tid in source_ids:
        created = dt.datetime.fromisoformat(by_id[tid]["created_at"].replace("Z", "+00:00"))
        k = rng.randint(5, 40) if tid in planted else rng.choice([0, 0, 0, 1, 2, 3, 5])
        for _ in range(k):
            offset = rng.uniform(-2, 48)  # some before creation, some beyond the horizon
            when = created + dt.timedelta(seconds=int(offset * 3600))
            events.append({"source_tweet_id": tid, "kind": rng.choice(["RETWEET", "RETWEET", "QUOTE"]),
                           "event_time": iso(when)})
    events.sort(key=lambda e: (e["event_time"], e["source_tweet_id"]))

    # retweet / quote records inside the tweet stream
    raw_extra = []
    for tid in rng.sample(planted, 10):
        created = dt.datetime.fromisoformat(by_id[tid]["created_at"].replace("Z", "+00:00"))
        rid = b.new_id()
        kind = rng.choice(["RETWEET", "QUOTE"])
        raw_extra.append({"id": rid, "kind": kind, "referenced_id": tid, "author_handle": "relay",
                          "text": "RT " + by_id[tid]["text"],
                          "created_at": iso(created + dt.timedelta(minutes=rng.randint(1, 600)))})
    reply_id = b.new_id()
    raw_extra.append({"id": reply_id, "kind": "REPLY", "referenced_id": planted[0], "author_handle": "someone",
                      "text": "is this true? #covid19", "created_at": "2020-03-01T10:00:00Z"})

    # snapshot
    snapshot = [{"snapshot_date": "2021-06-01"}]
    for tid in sorted(b.status):
        snapshot.append({"tweet_id": tid, "status": b.status[tid]})
    snapshot.append({"tweet_id": "999", "status": "LIVE"})  # unknown id, skipped

    # topic annotations
    annotations = []
    for tid in sorted(b.topic_of):
        for t in b.topic_of[tid]:
            annotations.append({"tweet_id": tid, "topic": t})

    return b, claims, planted, events, raw_extra, snapshot, annotations, source_ids


def labeled_dataset(rng, claims):
    rows = []
    for c in claims:
        words = c["text"].split()
        for k in range(2):
            w = list(words)
            w.insert(rng.randrange(len(w) + 1), rng.choice(CLAIM_NOISE))
            rows.append((c, " ".join(w), "MISINFORMATION"))
        rows.append((c, f"This is fake news, {c['text'].lower()} is not true", "DEBUNK"))
        rows.append((c, f"No evidence that {words[0].lower()} {' '.join(words[1:4])}, says a fact check", "DEBUNK"))
        rows.append((c, " ".join(rng.sample(FILLER_WORDS, 9)), "IRRELEVANT"))
        rows.append((c, f"{words[-1]} {' '.join(rng.sample(FILLER_WORDS, 7))}", "IRRELEVANT"))
    return [{"claim_id": c["id"], "claim": c["text"], "text": t, "label": l} for c, t, l in rows]


COVIDLIES = [
    ("Coronavirus is just a common cold", "The coronavirus is just a common cold, nothing more", "pos"),
    ("Coronavirus is just a common cold", "Doctors say covid is far worse than a common cold", "neg"),
    ("Coronavirus is just a common cold", "Great weather for a walk in the park today", "na"),
    ("Vitamin C megadoses cure covid", "Take vitamin C megadoses and the covid infection is gone", "pos"),
    ("Vitamin C megadoses cure covid", "There is no evidence vitamin C megadoses cure covid", "neg"),
    ("Vitamin C megadoses cure covid", "Queue outside the store again this morning", "na"),
    ("Drinking bleach protects people from the coronavirus", "Bleach drink protects you from the coronavirus", "pos"),
    ("Drinking bleach protects people from the coronavirus", "Never drink bleach, it does not protect anyone", "neg"),
    ("Ginger tea kills the coronavirus", "Drink ginger tea daily, it kills the coronavirus", "pos"),
    ("Ginger tea kills the coronavirus", "bogus label row", "maybe"),
]


def ifcn_articles(claims):
    picks = [0, 1, 4, 8, 12]
    out = []
    for n, i in enumerate(picks):
        c = claims[i]
        first = c["text"].split()[0]
        paras = [
            f"A post shared widely claims that {c['text'].lower()}. This is false.",
            f"One viral message reads “{c['text']} so share this now” before it is deleted.",
            f"Another version said \"{first} is the answer\" but carried no source.",
            "Health officials told reporters \"please follow the official guidance on masks and testing\" at the briefing.",
            "We rate this claim false.",
        ]
        if n == 2:
            paras[1] = f"The claim circulated as \"{c['text']}\" and as \"{c['text'].lower()} according to experts\"."
        out.append({
            "claim_id": c["id"],
            "debunk_url": c["debunk_url"],
            "claim": c["text"],
            "explanation": f"There is no scientific evidence for this. {first} does not do what the post says.",
            "article": "\n".join(paras),
        })
    out.append({"claim_id": "", "debunk_url": "https://factcheck.example.org/empty", "claim": "Garlic cures covid",
                "explanation": "", "article": "No explanation was published."})
    return out


def clean_fixture(claims):
    # ten pairs for the pair-cleaning predicate
    c = claims
    return [
        {"claim": c[1]["text"], "text": "5G towers near my house", "label": "MISINFORMATION"},
        {"claim": c[1]["text"], "text": "Radio waves from phones are everywhere", "label": "MISINFORMATION"},
        {"claim": c[1]["text"], "text": "Lovely sunny day", "label": "IRRELEVANT"},
        {"claim": c[4]["text"], "text": "Salt water gargle recipe", "label": "MISINFORMATION"},
        {"claim": c[4]["text"], "text": "The throat feels sore today", "label": "IRRELEVANT"},
        {"claim": c[4]["text"], "text": "kills it dead", "label": "MISINFORMATION"},
        {"claim": c[8]["text"], "text": "Never drink bleach", "label": "DEBUNK"},
        {"claim": c[8]["text"], "text": "Protects families from harm", "label": "DEBUNK"},
        {"claim": c[9]["text"], "text": "Tom Hanks is fine", "label": "DEBUNK"},
        {"claim": c[9]["text"], "text": "Testing positive is not a crime", "label": "IRRELEVANT"},
    ]


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for r in rows:
            if isinstance(r, str):
                f.write(r + "\n")
            else:
                f.write(json.dumps(r, ensure_ascii=False, sort_keys=False) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(ROOT / "tests" / "fixtures"))
    ap.add_argument("--seed", type=int, default=20200311)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    b, claims, planted, events, raw_extra, snapshot, annotations, source_ids = build(args.seed)
    rng = random.Random(args.seed + 1)

    stream = list(b.tweets) + raw_extra
    rng.shuffle(stream)
    lines = [r for r in stream]
    lines.insert(17, '{"id": "broken", "text": "unterminated')
    lines.insert(400, {"id": "1250000000000099999", "text": "no timestamp #covid19"})
    write_jsonl(out / "tweets.jsonl", lines)

    with open(out / "claims.csv", "w", encoding="utf-8", newline="\n") as f:
        f.write("id,text,debunk_date,topic,fact_checker,debunk_url\n")
        for c in claims:
            f.write(f"{c['id']},\"{c['text']}\",{c['debunk_date']},{c['topic']},{c['fact_checker']},{c['debunk_url']}\n")

    write_jsonl(out / "snapshot.jsonl", snapshot)
    write_jsonl(out / "events.jsonl", events)
    write_jsonl(out / "topic_annotations.jsonl", annotations)
    write_jsonl(out / "labeled_dataset.jsonl", labeled_dataset(rng, claims))
    write_jsonl(out / "covidlies.jsonl", [{"claim": a, "text": t, "label": l} for a, t, l in COVIDLIES])
    write_jsonl(out / "ifcn_articles.jsonl", ifcn_articles(claims))
    write_jsonl(out / "clean_pairs.jsonl", clean_fixture(claims))
    (out / "debunk_urls.txt").write_text(
        "https://www.factcheck.org/2020/04/covid-myths/\nhttps://fullfact.org/health/coronavirus-myths/\n",
        encoding="utf-8")
    (out / "spread_set.txt").write_text("\n".join(sorted(planted)) + "\n", encoding="utf-8")

    config = {
        "paths": {
            "corpus": "tweets.jsonl",
            "claims": "claims.csv",
            "snapshot": "snapshot.jsonl",
            "events": "events.jsonl",
            "lexicon": "../../data/demo_lexicon.dic",
            "keywords": "../../data/keywords.txt",
            "credible_accounts": "../../data/credible_accounts.txt",
            "debunk_urls": "debunk_urls.txt",
            "ifcn_articles": "ifcn_articles.jsonl",
            "covidlies": "covidlies.jsonl",
            "labeled_dataset": "labeled_dataset.jsonl",
            "topic_annotations": "topic_annotations.jsonl",
        },
        "analytics": {"n_comparison": 300},
        "lingstats": {"bow_top_k": 500},
        "seed": 7,
    }
    (out / "config.json").write_text(json.dumps(config, indent=2) + "\n", encoding="utf-8")
    print(f"{len(b.tweets)} tweets, {len(claims)} claims, {len(planted)} planted, {len(events)} events")


if __name__ == "__main__":
    main()
