"""User-extensible lexicon: proper names, nouns, verbs, of-constructs,
adjective+preposition entries, with their morphological forms.

Lexicons are immutable once built; every update produces a new value so
in-flight parses keep the old one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import LexiconError

PROPER_NAME = "proper-name"
NOUN = "noun"
VERB = "transitive-verb"
OFC = "of-construct"
ADJPREP = "adjective-preposition"

CATEGORIES = (PROPER_NAME, NOUN, VERB, OFC, ADJPREP)

# form slots per category
_SLOTS = {
    PROPER_NAME: ("name",),
    NOUN: ("sg", "pl"),
    VERB: ("sg", "pl", "pp"),        # pp optional: fused-preposition verbs have none
    OFC: ("sg", "pl"),               # surfaces carry the trailing " of"
    ADJPREP: ("adj",),               # adjective fused with its preposition
}


@dataclass(frozen=True)
class LexEntry:
    """One dictionary entry.

    ``forms`` maps a form slot to its surface text.  Proper names have a
    single "name" slot; ``definite_article`` marks names written with
    "The" (e.g. "The EventManager Tutorial").  A verb allows the passive
    exactly when it has a past-participle form.
    """

    category: str
    forms: dict
    definite_article: bool = False

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise LexiconError("unknown category %r" % (self.category,))
        required = _SLOTS[self.category]
        optional = ("pp",) if self.category == VERB else ()
        for slot in required:
            if slot in optional:
                continue
            if not self.forms.get(slot):
                raise LexiconError(
                    "%s entry is missing its %r form: %r"
                    % (self.category, slot, self.forms))
        for slot, text in self.forms.items():
            if slot not in required:
                raise LexiconError(
                    "%s entry has no %r slot" % (self.category, slot))
            if not text or text != text.strip():
                raise LexiconError("empty or unstripped form %r" % (text,))
        if self.category == OFC:
            for text in self.forms.values():
                if not text.endswith(" of"):
                    raise LexiconError(
                        "of-construct form %r must end with ' of'" % (text,))
        if self.definite_article and self.category != PROPER_NAME:
            raise LexiconError("only proper names take a definite article")

    @property
    def passive_allowed(self) -> bool:
        return self.category == VERB and bool(self.forms.get("pp"))

    @property
    def lemma(self) -> str:
        """Canonical predicate/display name: the first form, spaces as hyphens."""
        slot = _SLOTS[self.category][0]
        return self.forms[slot].replace(" ", "-")

    def surface(self, slot: str) -> str:
        return self.forms[slot]

    def surfaces(self):
        """All surfaces this entry can appear as in running text."""
        if self.category == PROPER_NAME:
            name = self.forms["name"]
            if self.definite_article:
                return ("the " + name, "The " + name)
            return (name,)
        return tuple(self.forms.values())

    def display_surface(self, slot: str = None) -> str:
        """Surface as offered to users (definite names keep their article)."""
        if self.category == PROPER_NAME:
            name = self.forms["name"]
            return "the " + name if self.definite_article else name
        return self.forms[slot or _SLOTS[self.category][0]]


class Lexicon:
    """An immutable set of entries with per-category surface uniqueness."""

    def __init__(self, entries=()):
        self._entries = tuple(entries)
        # (category, surface) -> [(entry, slot)]; across categories a surface
        # may legitimately repeat, within one category it may not.
        self._by_surface = {}
        seen = {}
        for entry in self._entries:
            for slot, text in entry.forms.items():
                key = (entry.category, text)
                if seen.get(key, entry) is not entry:
                    raise LexiconError(
                        "duplicate %s surface %r" % (entry.category, text))
                seen[key] = entry
                self._by_surface.setdefault(text, []).append((entry, slot))
            if entry.category == PROPER_NAME and entry.definite_article:
                for art in ("the ", "The "):
                    surf = art + entry.forms["name"]
                    self._by_surface.setdefault(surf, []).append((entry, "name"))

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def entries(self, category=None):
        if category is None:
            return self._entries
        return tuple(e for e in self._entries if e.category == category)

    def lookup_surface(self, surface):
        """All (entry, slot) pairs whose surface is exactly ``surface``."""
        return tuple(self._by_surface.get(surface, ()))

    def surfaces(self):
        return self._by_surface.keys()

    def has_forms(self, category, slot) -> bool:
        """True if at least one entry fills (category, slot); the grammar
        prunes productions whose terminals can never be scanned."""
        for entry in self._entries:
            if entry.category == category and entry.forms.get(slot):
                return True
        return False

    def find(self, category, first_form):
        """Entry of ``category`` whose canonical (first) form is ``first_form``."""
        slot = _SLOTS[category][0]
        for entry in self._entries:
            if entry.category == category and entry.forms.get(slot) == first_form:
                return entry
        return None

    def with_entries(self, new_entries) -> "Lexicon":
        """New lexicon value with ``new_entries`` appended."""
        return Lexicon(self._entries + tuple(new_entries))


def make_entry(category, *forms, definite_article=False) -> LexEntry:
    """Build an entry from positional forms in slot order."""
    slots = _SLOTS[category]
    if category == VERB and len(forms) == 2:
        slots = ("sg", "pl")
    if category == ADJPREP and len(forms) == 2:
        # spelled "adjective | preposition" in files; fuse into one surface
        forms = (forms[0] + " " + forms[1],)
    if len(forms) != len(slots):
        raise LexiconError(
            "%s takes forms %s, got %r" % (category, "/".join(slots), forms))
    return LexEntry(category, dict(zip(slots, forms)),
                    definite_article=definite_article)


def parse_lexicon_line(line) -> LexEntry | None:
    """Parse one ``category | form1 | form2 | ...`` line; None for blanks
    and comments."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    parts = [p.strip() for p in stripped.split("|")]
    category = parts[0]
    forms = [p for p in parts[1:] if p]
    if category not in CATEGORIES:
        raise LexiconError("unknown category %r in line %r" % (category, line))
    definite = False
    if category == PROPER_NAME and len(forms) == 1 and forms[0].startswith("The "):
        definite = True
        forms = [forms[0][len("The "):]]
    return make_entry(category, *forms, definite_article=definite)


def parse_lexicon(text) -> Lexicon:
    entries = []
    for i, line in enumerate(text.splitlines(), 1):
        try:
            entry = parse_lexicon_line(line)
        except LexiconError as exc:
            raise LexiconError("line %d: %s" % (i, exc)) from None
        if entry is not None:
            entries.append(entry)
    return Lexicon(entries)


def load_lexicon(path) -> Lexicon:
    with open(path, encoding="utf-8") as handle:
        return parse_lexicon(handle.read())
