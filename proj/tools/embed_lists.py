#!/usr/bin/env python3
"""Regenerates include/misinfo/default_lists.hpp from the word lists in data/."""
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
LISTS = [
    ("kDefaultStopwords", "stopwords.txt"),
    ("kDefaultVerbCues", "verb_cues.txt"),
    ("kDefaultDebunkCues", "debunk_cues.txt"),
    ("kDefaultKeywords", "keywords.txt"),
    ("kDefaultCredibleAccounts", "credible_accounts.txt"),
]


def main():
    out = ["#pragma once", "", "// Generated by tools/embed_lists.py from data/. Do not edit.", "",
           "#include <array>", "#include <string_view>", "", "namespace misinfo::lists {", ""]
    for name, fname in LISTS:
        words = [w.strip() for w in (ROOT / "data" / fname).read_text(encoding="utf-8").splitlines()]
        words = [w for w in words if w]
        out.append(f"inline constexpr std::array<std::string_view, {len(words)}> {name}{{")
        for w in words:
            esc = w.replace("\\", "\\\\").replace('"', '\\"')
            out.append(f'    "{esc}",')
        out.append("};")
        out.append("")
    out.append("}  // namespace misinfo::lists")
    out.append("")
    (ROOT / "include" / "misinfo" / "default_lists.hpp").write_text("\n".join(out), encoding="utf-8")


if __name__ == "__main__":
    main()
