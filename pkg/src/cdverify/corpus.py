"""Group-fact records: data model, text format, parser, and validator.

One group per ``.grp`` file.  The format is line-oriented UTF-8 with ``#``
comments:

    group <name>
    order <int> = <p>^<e> * <p>^<e> * ...
    degrees <d>:<m>, <d>:<m>, ...     # ":m" optional; omitting any m skips
                                      # the sum-of-squares check
    maximal <name> order <int>        # repeatable
    schur <int>
    out <int>
    cover <c> <name> degrees <...>    # repeatable
    extendible <d>, <d>, ...
    flags simple|solvable|nonsolvable

Unknown keys are rejected.  Orders are stored factored and the parser
verifies the factorization recomposes to the stated integer.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .arith import FactoredInt, factorize


class CorpusError(Exception):
    """Parse or integrity failure; carries file/line context when known."""

    def __init__(self, message: str, source: str = "", line: int = 0):
        self.source = source
        self.line = line
        where = f"{source}:{line}: " if source else ""
        super().__init__(f"{where}{message}")


@dataclass(frozen=True)
class DegreeMultiset:
    """Distinct character degrees with multiplicities, strictly increasing.

    ``complete`` is True when every multiplicity was given explicitly; only
    then does the first-orthogonality sum check apply.
    """

    entries: tuple[tuple[int, int], ...]
    complete: bool = True

    def __post_init__(self):
        last = 0
        for d, m in self.entries:
            if d <= last:
                raise ValueError("degrees must be strictly increasing")
            if m < 1:
                raise ValueError(f"multiplicity of {d} must be >= 1")
            last = d
        if not self.entries or self.entries[0][0] != 1:
            raise ValueError("degree 1 must be present")

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.entries)

    def degree_set(self) -> frozenset[int]:
        return frozenset(d for d, _ in self.entries)

    def nontrivial(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.entries if d > 1)

    def multiplicity(self, d: int) -> int:
        for e, m in self.entries:
            if e == d:
                return m
        return 0

    def __contains__(self, d: int) -> bool:
        return any(e == d for e, _ in self.entries)

    def sum_of_squares(self) -> int:
        return sum(m * d * d for d, m in self.entries)


@dataclass(frozen=True)
class MaximalSubgroupEntry:
    name: str
    order: int

    def index_in(self, group_order: int) -> int:
        if group_order % self.order != 0:
            raise ValueError(
                f"order {self.order} of {self.name} does not divide "
                f"{group_order}"
            )
        return group_order // self.order


@dataclass(frozen=True)
class CoverRecord:
    """A covering group c.G: central extension by a cyclic group of order c."""

    multiplier_divisor: int
    name: str
    degrees: DegreeMultiset

    def faithful_degrees(self, base: DegreeMultiset) -> tuple[int, ...]:
        """Degrees of the cover outside cd(base): the projective degrees."""
        base_set = base.degree_set()
        return tuple(d for d in self.degrees.degrees if d not in base_set)


@dataclass(frozen=True)
class GroupRecord:
    name: str
    order: FactoredInt
    degrees: DegreeMultiset
    maximals: tuple[MaximalSubgroupEntry, ...] = ()
    schur_multiplier_order: int | None = None
    outer_order: int | None = None
    covers: tuple[CoverRecord, ...] = ()
    extendible_degrees: tuple[int, ...] = ()
    is_simple: bool = False
    solvable: bool | None = None

    def degree_set(self) -> frozenset[int]:
        return self.degrees.degree_set()

    def maximal_indices(self) -> tuple[int, ...]:
        return tuple(m.index_in(self.order.value) for m in self.maximals)

    def projective_degrees(self) -> tuple[int, ...]:
        """Union over covers of cd(cover) minus cd(base), nontrivial."""
        out: set[int] = set()
        base = self.degrees
        for c in self.covers:
            out.update(c.faithful_degrees(base))
        return tuple(sorted(d for d in out if d > 1))


class Corpus:
    """Immutable name -> GroupRecord mapping."""

    def __init__(self, records: dict[str, GroupRecord]):
        self._records = dict(records)

    def __getitem__(self, name: str) -> GroupRecord:
        try:
            return self._records[name]
        except KeyError:
            raise KeyError(f"no corpus record named {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._records

    def __iter__(self):
        return iter(sorted(self._records))

    def __len__(self) -> int:
        return len(self._records)

    def get(self, name: str) -> GroupRecord | None:
        return self._records.get(name)

    def names(self) -> list[str]:
        return sorted(self._records)


_KEYS = ("group", "order", "degrees", "maximal", "schur", "out", "cover",
         "extendible", "flags")


def _parse_int(tok: str, source: str, line: int) -> int:
    tok = tok.strip()
    if not tok or not all(c.isdigit() for c in tok):
        raise CorpusError(f"expected integer, got {tok!r}", source, line)
    return int(tok)


def _parse_factored(text: str, source: str, line: int) -> FactoredInt:
    """Parse ``<int> = p^e * p^e * ...`` (the "= ..." part optional)."""
    if "=" in text:
        val_s, fac_s = text.split("=", 1)
        value = _parse_int(val_s, source, line)
        factors = []
        for term in fac_s.split("*"):
            term = term.strip()
            if not term:
                raise CorpusError("empty factor term", source, line)
            if "^" in term:
                p_s, e_s = term.split("^", 1)
                p, e = _parse_int(p_s, source, line), _parse_int(e_s, source, line)
            else:
                p, e = _parse_int(term, source, line), 1
            factors.append((p, e))
        try:
            return FactoredInt(value, tuple(sorted(factors)))
        except ValueError as exc:
            raise CorpusError(str(exc), source, line) from None
    value = _parse_int(text, source, line)
    return factorize(value)


def _parse_degree_list(text: str, source: str, line: int):
    """Parse ``d[:m], d[:m], ...`` -> (entries, complete)."""
    entries = []
    complete = True
    for item in text.split(","):
        item = item.strip()
        if not item:
            raise CorpusError("empty degree entry", source, line)
        if ":" in item:
            d_s, m_s = item.split(":", 1)
            d = _parse_int(d_s, source, line)
            m = _parse_int(m_s, source, line)
        else:
            d = _parse_int(item, source, line)
            m = 1
            complete = False
        entries.append((d, m))
    return entries, complete


def _make_multiset(entries, complete, source, line) -> DegreeMultiset:
    try:
        return DegreeMultiset(tuple(entries), complete)
    except ValueError as exc:
        raise CorpusError(str(exc), source, line) from None


def parse_group_record(text: str, source: str = "<string>") -> GroupRecord:
    """Parse one record from corpus-format text."""
    name = None
    order = None
    degrees = None
    maximals: list[MaximalSubgroupEntry] = []
    schur = None
    out = None
    covers: list[CoverRecord] = []
    extendible: list[int] = []
    is_simple = False
    solvable = None
    seen: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split(None, 1)
        key = parts[0]
        rest = parts[1] if len(parts) > 1 else ""
        if key not in _KEYS:
            raise CorpusError(f"unknown key {key!r}", source, lineno)
        if key in ("group", "order", "degrees", "schur", "out", "extendible",
                   "flags") and key in seen:
            raise CorpusError(f"duplicate section {key!r}", source, lineno)
        seen.add(key)

        if key == "group":
            if not rest:
                raise CorpusError("missing group name", source, lineno)
            name = rest.strip()
        elif key == "order":
            order = _parse_factored(rest, source, lineno)
        elif key == "degrees":
            entries, complete = _parse_degree_list(rest, source, lineno)
            degrees = _make_multiset(entries, complete, source, lineno)
        elif key == "maximal":
            toks = rest.rsplit(" order ", 1)
            if len(toks) != 2 or not toks[0].strip():
                raise CorpusError(
                    "expected: maximal <name> order <int>", source, lineno)
            maximals.append(MaximalSubgroupEntry(
                toks[0].strip(), _parse_int(toks[1], source, lineno)))
        elif key == "schur":
            schur = _parse_int(rest, source, lineno)
        elif key == "out":
            out = _parse_int(rest, source, lineno)
        elif key == "cover":
            toks = rest.split(None, 2)
            if len(toks) != 3 or not toks[2].startswith("degrees"):
                raise CorpusError(
                    "expected: cover <c> <name> degrees <...>", source, lineno)
            c = _parse_int(toks[0], source, lineno)
            entries, complete = _parse_degree_list(
                toks[2][len("degrees"):], source, lineno)
            covers.append(CoverRecord(
                c, toks[1], _make_multiset(entries, complete, source, lineno)))
        elif key == "extendible":
            extendible = [
                _parse_int(t, source, lineno) for t in rest.split(",")]
        elif key == "flags":
            for tok in rest.split():
                if tok == "simple":
                    is_simple = True
                    solvable = False
                elif tok == "solvable":
                    solvable = True
                elif tok == "nonsolvable":
                    solvable = False
                else:
                    raise CorpusError(f"unknown flag {tok!r}", source, lineno)

    if name is None:
        raise CorpusError("missing 'group' line", source, 0)
    if order is None:
        raise CorpusError(f"record {name}: missing 'order' line", source, 0)
    if degrees is None:
        raise CorpusError(f"record {name}: missing 'degrees' line", source, 0)
    return GroupRecord(
        name=name, order=order, degrees=degrees, maximals=tuple(maximals),
        schur_multiplier_order=schur, outer_order=out, covers=tuple(covers),
        extendible_degrees=tuple(extendible), is_simple=is_simple,
        solvable=solvable)


def serialize_group_record(g: GroupRecord) -> str:
    """Canonical text form; parse(serialize(g)) == g."""
    lines = [f"group {g.name}", f"order {g.order.value} = {g.order}"]

    def fmt(ms: DegreeMultiset) -> str:
        if ms.complete:
            return ", ".join(f"{d}:{m}" for d, m in ms.entries)
        return ", ".join(str(d) for d, _ in ms.entries)

    lines.append(f"degrees {fmt(g.degrees)}")
    for m in g.maximals:
        lines.append(f"maximal {m.name} order {m.order}")
    if g.schur_multiplier_order is not None:
        lines.append(f"schur {g.schur_multiplier_order}")
    if g.outer_order is not None:
        lines.append(f"out {g.outer_order}")
    for c in g.covers:
        lines.append(f"cover {c.multiplier_divisor} {c.name} "
                     f"degrees {fmt(c.degrees)}")
    if g.extendible_degrees:
        lines.append("extendible " +
                     ", ".join(str(d) for d in g.extendible_degrees))
    flags = []
    if g.is_simple:
        flags.append("simple")
    elif g.solvable is True:
        flags.append("solvable")
    elif g.solvable is False:
        flags.append("nonsolvable")
    if flags:
        lines.append("flags " + " ".join(flags))
    return "\n".join(lines) + "\n"


def validate_record(g: GroupRecord) -> list[str]:
    """Integrity checks; returns human-readable violations (empty = clean).

    Violations are data findings, not exceptions: callers decide severity.
    """
    issues: list[str] = []
    n = g.order.value

    for d in g.degrees.degrees:
        if n % d != 0:
            issues.append(f"Lagrange violated: degree {d} does not divide "
                          f"|{g.name}| = {n}")
    if g.degrees.complete:
        s = g.degrees.sum_of_squares()
        if s != n:
            issues.append(
                f"orthogonality violated: sum m*d^2 = {s} but |{g.name}| = {n}")

    for m in g.maximals:
        if n % m.order != 0:
            issues.append(f"Lagrange violated: maximal {m.name} order "
                          f"{m.order} does not divide {n}")

    ext = set(g.extendible_degrees)
    missing = ext - g.degrees.degree_set()
    if missing:
        issues.append(f"extendible degrees {sorted(missing)} not in the "
                      f"degree set of {g.name}")

    for c in g.covers:
        if c.multiplier_divisor < 2:
            issues.append(f"cover {c.name}: multiplier divisor must be >= 2")
        if (g.schur_multiplier_order is not None
                and g.schur_multiplier_order % c.multiplier_divisor != 0):
            issues.append(
                f"cover {c.name}: {c.multiplier_divisor} does not divide "
                f"the Schur multiplier order {g.schur_multiplier_order}")
        base_set = g.degrees.degree_set()
        not_contained = base_set - c.degrees.degree_set()
        if not_contained:
            issues.append(
                f"cover {c.name}: base degrees {sorted(not_contained)[:5]} "
                f"missing from the cover degree set")
        cover_order = c.multiplier_divisor * n
        for d in c.degrees.degrees:
            if cover_order % d != 0:
                issues.append(f"cover {c.name}: degree {d} does not divide "
                              f"{cover_order}")
        if c.degrees.complete:
            s = c.degrees.sum_of_squares()
            if s != cover_order:
                issues.append(
                    f"cover {c.name}: orthogonality violated: sum m*d^2 = "
                    f"{s} but |{c.name}| = {cover_order}")

    if g.is_simple and g.solvable:
        issues.append(f"{g.name} flagged both simple and solvable")
    return issues


def load_corpus(root: str | os.PathLike, strict: bool = True) -> Corpus:
    """Parse and validate every ``.grp`` file under ``root``.

    Any parse failure, validation violation, or duplicate name aborts with
    the offending file named (when ``strict``).
    """
    records: dict[str, GroupRecord] = {}
    paths = sorted(
        os.path.join(root, f) for f in os.listdir(root) if f.endswith(".grp"))
    for path in paths:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        rec = parse_group_record(text, source=os.path.basename(path))
        if rec.name in records:
            raise CorpusError(f"duplicate group name {rec.name!r}",
                              os.path.basename(path))
        if strict:
            issues = validate_record(rec)
            if issues:
                raise CorpusError(
                    f"record {rec.name} failed validation: " +
                    "; ".join(issues), os.path.basename(path))
        records[rec.name] = rec
    return Corpus(records)


def bundled_data_dir() -> str:
    """Directory holding the data files shipped with the package."""
    return os.path.join(os.path.dirname(__file__), "data")


def load_bundled_corpus() -> Corpus:
    return load_corpus(bundled_data_dir())
