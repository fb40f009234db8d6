#pragma once

// Generated by tools/embed_lists.py from data/. Do not edit.

#include <array>
#include <string_view>

namespace misinfo::lists {

inline constexpr std::array<std::string_view, 156> kDefaultStopwords{
    "a",
    "about",
    "above",
    "after",
    "again",
    "against",
    "ain",
    "all",
    "am",
    "an",
    "and",
    "any",
    "are",
    "arent",
    "as",
    "at",
    "be",
    "because",
    "been",
    "before",
    "being",
    "below",
    "between",
    "both",
    "but",
    "by",
    "can",
    "couldnt",
    "d",
    "did",
    "didnt",
    "do",
    "does",
    "doesnt",
    "doing",
    "dont",
    "down",
    "during",
    "each",
    "few",
    "for",
    "from",
    "further",
    "had",
    "hadnt",
    "has",
    "hasnt",
    "have",
    "havent",
    "having",
    "he",
    "her",
    "here",
    "hers",
    "herself",
    "him",
    "himself",
    "his",
    "how",
    "i",
    "if",
    "in",
    "into",
    "is",
    "isnt",
    "it",
    "its",
    "itself",
    "just",
    "ll",
    "m",
    "me",
    "more",
    "most",
    "mustnt",
    "my",
    "myself",
    "no",
    "nor",
    "not",
    "now",
    "o",
    "of",
    "off",
    "on",
    "once",
    "only",
    "or",
    "other",
    "our",
    "ours",
    "ourselves",
    "out",
    "over",
    "own",
    "re",
    "s",
    "same",
    "shant",
    "she",
    "shes",
    "should",
    "shouldnt",
    "so",
    "some",
    "such",
    "t",
    "than",
    "that",
    "thatll",
    "the",
    "their",
    "theirs",
    "them",
    "themselves",
    "then",
    "there",
    "these",
    "they",
    "this",
    "those",
    "through",
    "to",
    "too",
    "under",
    "until",
    "up",
    "ve",
    "very",
    "was",
    "wasnt",
    "we",
    "were",
    "werent",
    "what",
    "when",
    "where",
    "which",
    "while",
    "who",
    "whom",
    "why",
    "will",
    "with",
    "wont",
    "wouldnt",
    "y",
    "you",
    "youd",
    "youll",
    "your",
    "youre",
    "yours",
    "yourself",
    "yourselves",
    "youve",
};

inline constexpr std::array<std::string_view, 451> kDefaultVerbCues{
    "accept",
    "accepted",
    "accepts",
    "add",
    "added",
    "adds",
    "affect",
    "affected",
    "affects",
    "allow",
    "allowed",
    "allows",
    "alter",
    "altered",
    "alters",
    "am",
    "announce",
    "announced",
    "announces",
    "appear",
    "appeared",
    "appears",
    "are",
    "arrest",
    "arrested",
    "arrests",
    "ask",
    "asked",
    "asks",
    "ate",
    "attacked",
    "avoid",
    "avoided",
    "avoids",
    "banned",
    "banning",
    "bans",
    "be",
    "became",
    "become",
    "becomes",
    "believe",
    "believed",
    "believes",
    "block",
    "blocked",
    "blocks",
    "boost",
    "boosted",
    "boosts",
    "bought",
    "bring",
    "brings",
    "brought",
    "buy",
    "buys",
    "came",
    "can",
    "cancel",
    "canceled",
    "cancels",
    "catch",
    "catches",
    "caught",
    "cause",
    "caused",
    "causes",
    "changed",
    "claim",
    "claimed",
    "claims",
    "come",
    "comes",
    "contain",
    "contained",
    "contains",
    "controlled",
    "could",
    "create",
    "created",
    "creates",
    "cured",
    "cures",
    "damaged",
    "declare",
    "declared",
    "declares",
    "denied",
    "denies",
    "deny",
    "destroy",
    "destroyed",
    "destroys",
    "develop",
    "developed",
    "develops",
    "did",
    "die",
    "died",
    "dies",
    "discover",
    "discovered",
    "discovers",
    "display",
    "displayed",
    "displays",
    "do",
    "does",
    "drank",
    "drink",
    "drinks",
    "eat",
    "eats",
    "edit",
    "edited",
    "edits",
    "emerge",
    "emerged",
    "emerges",
    "endanger",
    "endangered",
    "endangers",
    "ended",
    "engineer",
    "engineered",
    "engineers",
    "enter",
    "entered",
    "enters",
    "explode",
    "exploded",
    "explodes",
    "expose",
    "exposed",
    "exposes",
    "fail",
    "failed",
    "fails",
    "fake",
    "faked",
    "fakes",
    "find",
    "finds",
    "force",
    "forced",
    "forces",
    "found",
    "funded",
    "gave",
    "get",
    "gets",
    "give",
    "gives",
    "go",
    "goes",
    "got",
    "had",
    "has",
    "have",
    "held",
    "help",
    "helped",
    "helps",
    "hide",
    "hided",
    "hides",
    "hold",
    "holds",
    "ignore",
    "ignored",
    "ignores",
    "implant",
    "implanted",
    "implants",
    "impose",
    "imposed",
    "imposes",
    "improve",
    "improved",
    "improves",
    "include",
    "included",
    "includes",
    "increase",
    "increased",
    "increases",
    "infect",
    "infected",
    "infects",
    "inject",
    "injected",
    "injects",
    "invent",
    "invented",
    "invents",
    "involve",
    "involved",
    "involves",
    "is",
    "join",
    "joined",
    "joins",
    "keep",
    "keeps",
    "kept",
    "kill",
    "killed",
    "kills",
    "knew",
    "know",
    "knows",
    "laugh",
    "laughed",
    "laughs",
    "launch",
    "launched",
    "launches",
    "lead",
    "leads",
    "leaked",
    "leave",
    "leaves",
    "led",
    "left",
    "liked",
    "listed",
    "lived",
    "look",
    "looked",
    "looks",
    "lose",
    "loses",
    "lost",
    "made",
    "make",
    "makes",
    "manufacture",
    "manufactured",
    "manufactures",
    "may",
    "mention",
    "mentioned",
    "mentions",
    "might",
    "move",
    "moved",
    "moves",
    "murder",
    "murdered",
    "murders",
    "must",
    "need",
    "needed",
    "needs",
    "offer",
    "offered",
    "offers",
    "ordered",
    "own",
    "owned",
    "owns",
    "paid",
    "patented",
    "pay",
    "pays",
    "planned",
    "planning",
    "plans",
    "planted",
    "poison",
    "poisoned",
    "poisons",
    "posted",
    "predict",
    "predicted",
    "predicts",
    "prepare",
    "prepared",
    "prepares",
    "present",
    "presented",
    "presents",
    "prevent",
    "prevented",
    "prevents",
    "produce",
    "produced",
    "produces",
    "protect",
    "protected",
    "protects",
    "prove",
    "proved",
    "proven",
    "proves",
    "provide",
    "provided",
    "provides",
    "publish",
    "published",
    "publishes",
    "push",
    "pushed",
    "pushes",
    "put",
    "puts",
    "ran",
    "reach",
    "reached",
    "reaches",
    "receive",
    "received",
    "receives",
    "recommend",
    "recommended",
    "recommends",
    "refuse",
    "refused",
    "refuses",
    "release",
    "released",
    "releases",
    "remove",
    "removed",
    "removes",
    "replace",
    "replaced",
    "replaces",
    "require",
    "required",
    "requires",
    "reveal",
    "revealed",
    "reveals",
    "run",
    "runs",
    "said",
    "save",
    "saved",
    "saves",
    "saw",
    "say",
    "says",
    "see",
    "sees",
    "sell",
    "sells",
    "send",
    "sends",
    "sent",
    "shall",
    "share",
    "shared",
    "shares",
    "should",
    "show",
    "showed",
    "shows",
    "shut",
    "shuts",
    "sicken",
    "sickened",
    "sickens",
    "sold",
    "spray",
    "sprayed",
    "sprays",
    "spread",
    "spreading",
    "spreads",
    "start",
    "started",
    "starts",
    "steal",
    "steals",
    "stole",
    "stop",
    "stopped",
    "stops",
    "struggle",
    "struggled",
    "struggles",
    "suffer",
    "suffered",
    "suffers",
    "suggest",
    "suggested",
    "suggests",
    "support",
    "supported",
    "supports",
    "suspend",
    "suspended",
    "suspends",
    "take",
    "takes",
    "tell",
    "tells",
    "think",
    "thinks",
    "thought",
    "threaten",
    "threatened",
    "threatens",
    "told",
    "took",
    "track",
    "tracked",
    "tracks",
    "transmit",
    "transmits",
    "transmitted",
    "treat",
    "treated",
    "treats",
    "tried",
    "tries",
    "try",
    "turn",
    "turned",
    "turns",
    "use",
    "used",
    "uses",
    "vaccinate",
    "vaccinated",
    "vaccinates",
    "want",
    "wanted",
    "wants",
    "warn",
    "warned",
    "warns",
    "was",
    "weaken",
    "weakened",
    "weakens",
    "wear",
    "wears",
    "went",
    "were",
    "will",
    "wore",
    "worked",
    "worsen",
    "worsened",
    "worsens",
    "would",
    "write",
    "writes",
    "wrote",
};

inline constexpr std::array<std::string_view, 20> kDefaultDebunkCues{
    "debunk",
    "debunked",
    "debunking",
    "debunks",
    "disinformation",
    "fact check",
    "fact checked",
    "fact checking",
    "factcheck",
    "factchecked",
    "false",
    "falsely",
    "fake news",
    "hoax",
    "misinformation",
    "misleading",
    "myth",
    "no evidence",
    "not true",
    "untrue",
};

inline constexpr std::array<std::string_view, 102> kDefaultKeywords{
    "#blackfungus",
    "#covid19vaccination",
    "#socialdistancing",
    "#chinesebioterrorism",
    "#greatreset",
    "#chinesevirus",
    "#covid19vaccine",
    "#stayathome",
    "#hydroxichloroquine",
    "#corona",
    "#covid2019",
    "#stayhomestaysafe",
    "#ciavirus",
    "#hydroxychloroquine",
    "#corona19",
    "#covid2019uk",
    "#staysafe",
    "#coronabollocks",
    "#idonotconsent",
    "#corona2019",
    "#covid_19",
    "#unite2fightcorona",
    "#coronacon",
    "#israelvirus",
    "#coronapandemic",
    "#covid_19_uk",
    "#wearamask",
    "#coronafacts",
    "#kungflu",
    "#coronasecondwave",
    "#covid_2019_uk",
    "#workfromhome",
    "#coronafakenews",
    "#mildsymptoms",
    "#coronaupdate",
    "#covidemergency",
    "#wuhanvirus",
    "#coronafraud",
    "#nwo",
    "#coronav",
    "#covidemergency2021",
    "#5g",
    "#coronahoax",
    "#nwoevilelites",
    "#coronavaccine",
    "#covidhelp",
    "#5gcoronavirus",
    "#coronasymptoms",
    "#nwoevilplans",
    "#coronavirus",
    "#covidresources",
    "#americavirus",
    "#coronavillains",
    "#nwovirus",
    "#coronavirus19",
    "#covidsecondwave",
    "#astrazeneca",
    "#coronavirus5g",
    "#obamagate",
    "#coronavirus2019",
    "#covidsos",
    "#ccpvirus",
    "#coronaviruscoverup",
    "#oxfordvaccine",
    "#coronavirusoutbreak",
    "#coviduk",
    "#chinaliedandpeopledied",
    "#coronavirusfacts",
    "#plandemic",
    "#coronaviruspandemic",
    "#covidvaccination",
    "#chinaliedpeopledied",
    "#covid19symptoms",
    "#preventnwo",
    "#coronavirustruth",
    "#covidvaccine",
    "#chinaliespeopledied",
    "#covidiots",
    "#remdesivir",
    "#coronavirusupdates",
    "#covid?19",
    "#covidsymptoms",
    "#reopenbritain",
    "#covid",
    "#lockdown",
    "#cronyvirus",
    "#resistthegreatreset",
    "#covid-19",
    "#lockdown2021",
    "#deepstatevirus",
    "#scamdemic",
    "#covid-19-uk",
    "#pandemic",
    "#depopulation",
    "#sorosvirus",
    "#covid19",
    "#remotework",
    "#endthelockdown",
    "#wholiedpeopledied",
    "#covid19uk",
    "#sarscov2",
    "#endthelockdownuk",
};

inline constexpr std::array<std::string_view, 9> kDefaultCredibleAccounts{
    "ANI",
    "GT",
    "roinnslainte",
    "WHO",
    "wef",
    "GHS",
    "AFP",
    "UN",
    "EMRO",
};

}  // namespace misinfo::lists
