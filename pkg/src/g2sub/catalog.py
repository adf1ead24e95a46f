"""Tables of expected results stored as text, and the runner that checks them.

File format (UTF-8, ``#`` starts a comment)::

    [T3:7]
    gens = "X[0,1]+X[3,1]; X[2,1]; X[3,2]"
    expect = solvable, nonregular, nilpotent, branch=inside_n

A block starts with ``[TABLE:ROW]``.  Fields are ``key = value`` and are
separated by newlines or by ``;`` outside double quotes, so a block may also
sit on one line.  Keys may repeat.
"""

from __future__ import annotations

import enum
import json
import shlex
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from pathlib import Path

from .algebra import H_OFFSET, ad_rank, bracket, is_nilpotent_element
from .expr import format_element, parse_element, parse_elements
from .nilpotent import (
    ORBIT_BY_NAME,
    Branch,
    classify_nilpotent,
    lemma5_branch,
    match_table10_schema,
    verify_corollary1_entry,
)
from .regular import (
    LType,
    RegularSpec,
    canonical_spec,
    classify_regular_types,
    counts_by_dimension,
    total_regular_types,
)
from .reps import (
    Sl2Triple,
    check_direct_sum,
    decompose_under_sl2,
    dynkin_index,
    joint_weights,
    verify_submodule,
    verify_triple,
)
from .roots import ROOTS, mask_of
from .subspace import (
    Subspace,
    derived_series,
    is_regular_form,
    is_subalgebra,
    normalizer,
    probe_elements,
    span,
)
from .witnesses import all_witnesses

DATA_DIR = Path(__file__).with_name("data")
TABLE_IDS = ("T2", "T3", "T10", "T20", "T40", "PROP1", "PROP2")
_FILES = {tid: f"{tid.lower()}.cat" for tid in TABLE_IDS}


# -- parsing ---------------------------------------------------------------


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    table_id: str
    row_id: str
    fields: tuple  # ((key, raw value), ...) in file order

    def values(self, key: str) -> list[str]:
        return [v for k, v in self.fields if k == key]

    def get(self, key: str, default=None):
        vals = self.values(key)
        return vals[0] if vals else default

    def text(self, key: str, default=None):
        """The value with one layer of double quotes removed."""
        raw = self.get(key)
        if raw is None:
            return default
        return _unquote(raw)

    def tokens(self, key: str) -> list[str]:
        raw = self.get(key)
        return shlex.split(raw) if raw is not None else []

    def flags(self, key: str = "expect") -> dict:
        """Comma list of ``name`` or ``name=value`` items."""
        out = {}
        raw = self.get(key) or ""
        for item in raw.split(","):
            item = item.strip()
            if not item:
                continue
            name, _, value = item.partition("=")
            out[name.strip()] = value.strip() if value else True
        return out

    def lambdas(self) -> list:
        raw = self.get("lambda")
        if raw is None:
            return [None]
        return [Fraction(x.strip()) for x in raw.split(",")]

    def expressions(self) -> list[str]:
        """Every element expression in the entry, one string per element."""
        out = []
        for _, raw in self.fields:
            for tok in _quoted_parts(raw):
                out += [t.strip() for t in tok.split(";") if t.strip()]
        return out


def _unquote(raw: str) -> str:
    raw = raw.strip()
    if len(raw) >= 2 and raw[0] == raw[-1] == '"':
        return raw[1:-1]
    return raw


def _quoted_parts(raw: str) -> list[str]:
    parts = raw.split('"')
    return parts[1::2]


def _split_fields(body: str) -> list[str]:
    out, cur, quoted = [], [], False
    for ch in body:
        if ch == '"':
            quoted = not quoted
        if not quoted and ch in ";\n":
            out.append("".join(cur))
            cur = []
            continue
        cur.append(ch)
    if quoted:
        raise CatalogError("unterminated string")
    out.append("".join(cur))
    return [f.strip() for f in out if f.strip()]


def _strip_comment(line: str) -> str:
    quoted = False
    for i, ch in enumerate(line):
        if ch == '"':
            quoted = not quoted
        elif ch == "#" and not quoted:
            return line[:i]
    return line


def parse_catalog(text: str) -> list[CatalogEntry]:
    entries = []
    header, body = None, []

    def flush():
        if header is None:
            if "".join(body).strip():
                raise CatalogError("fields before the first [TABLE:ROW] header")
            return
        tid, _, rid = header.partition(":")
        fields = []
        for f in _split_fields("\n".join(body)):
            key, eq, value = f.partition("=")
            if not eq:
                raise CatalogError(f"[{header}]: field without '=': {f!r}")
            fields.append((key.strip(), value.strip()))
        entries.append(CatalogEntry(tid.strip(), rid.strip(), tuple(fields)))

    for line in text.splitlines():
        line = _strip_comment(line)
        stripped = line.strip()
        if stripped.startswith("["):
            flush()
            close = stripped.find("]")
            if close < 0:
                raise CatalogError(f"unclosed header: {stripped!r}")
            header, body = stripped[1:close], [stripped[close + 1 :]]
        else:
            body.append(line)
    flush()
    return entries


@lru_cache(maxsize=None)
def load_table(table_id: str) -> tuple:
    if table_id not in _FILES:
        raise KeyError(f"unknown table {table_id!r}")
    text = (DATA_DIR / _FILES[table_id]).read_text(encoding="utf-8")
    entries = tuple(parse_catalog(text))
    for e in entries:
        if e.table_id != table_id:
            raise CatalogError(f"{_FILES[table_id]} holds an entry for {e.table_id}")
    return entries


def entry(table_id: str, row_id) -> CatalogEntry:
    for e in load_table(table_id):
        if e.row_id == str(row_id):
            return e
    raise KeyError(f"{table_id}:{row_id}")


def roundtrip_failures() -> list[tuple]:
    """Catalog expressions whose canonical printing differs from the stored text."""
    out = []
    for tid in TABLE_IDS:
        for e in load_table(tid):
            for expr in e.expressions():
                if "{lambda}" in expr:
                    continue
                printed = format_element(parse_element(expr))
                if printed != expr:
                    out.append((tid, e.row_id, expr, printed))
    return out


# -- reports ---------------------------------------------------------------


class Status(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class Record:
    table_id: str
    row_id: str
    check: str
    status: Status
    details: str = ""

    def line(self) -> str:
        tail = f"  {self.details}" if self.details else ""
        return f"{self.status.value:7} {self.table_id}:{self.row_id} {self.check}{tail}"


@dataclass
class VerificationReport:
    entries: list = field(default_factory=list)

    def add(self, table_id, row_id, check, ok, details=""):
        status = ok if isinstance(ok, Status) else (Status.PASS if ok else Status.FAIL)
        self.entries.append(Record(table_id, str(row_id), check, status, details))

    def extend(self, other: VerificationReport):
        self.entries.extend(other.entries)
        return self

    @property
    def ok(self) -> bool:
        return all(r.status is not Status.FAIL for r in self.entries)

    def count(self, status: Status) -> int:
        return sum(r.status is status for r in self.entries)

    def failures(self) -> list[Record]:
        return [r for r in self.entries if r.status is Status.FAIL]

    def rows(self, table_id: str) -> list[str]:
        seen = []
        for r in self.entries:
            if r.table_id == table_id and r.row_id not in seen:
                seen.append(r.row_id)
        return seen

    def summary(self) -> str:
        return (
            f"{len(self.entries)} checks: {self.count(Status.PASS)} passed, "
            f"{self.count(Status.FAIL)} failed, {self.count(Status.SKIPPED)} skipped"
        )

    def to_text(self) -> str:
        return "\n".join([r.line() for r in self.entries] + [self.summary()]) + "\n"

    def to_json(self) -> str:
        doc = {
            "ok": self.ok,
            "summary": {s.value.lower(): self.count(s) for s in Status},
            "entries": [
                {
                    "table": r.table_id,
                    "row": r.row_id,
                    "check": r.check,
                    "status": r.status.value,
                    "details": r.details,
                }
                for r in self.entries
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _guard(report: VerificationReport, tid: str, rid: str, check: str, fn):
    """Run fn() and record its truth value; exceptions become FAIL records."""
    try:
        result = fn()
    except Exception as err:  # noqa: BLE001 - a crash is a failed check, not a crash of the run
        report.add(tid, rid, check, False, f"{type(err).__name__}: {err}")
        return None
    if isinstance(result, tuple):
        ok, details = result
    else:
        ok, details = result, ""
    report.add(tid, rid, check, ok, details)
    return result


# -- per-table checks ------------------------------------------------------


def _subspace(text: str, lam=None) -> Subspace:
    return span(parse_elements(text, lam))


def _suffix(lam) -> str:
    return "" if lam is None else f"[lambda={lam}]"


def _t40_by_t3() -> dict:
    return {int(e.get("t3")): e for e in load_table("T40") if e.get("t3")}


def _verify_t3(report: VerificationReport):
    links = _t40_by_t3()
    seen = []
    for e in load_table("T3"):
        rid = e.row_id
        expect = e.flags()
        for lam in e.lambdas():
            sfx = _suffix(lam)
            s = _subspace(e.text("gens"), lam)
            seen.append((rid + sfx, s))
            closed = _guard(report, "T3", rid, "subalgebra" + sfx, lambda: is_subalgebra(s))
            if not closed:
                continue
            if expect.get("solvable"):
                _guard(report, "T3", rid, "solvable" + sfx, lambda: derived_series(s)[-1].dim == 0)
            if expect.get("nonregular"):
                _guard(report, "T3", rid, "not_regular_form" + sfx, lambda: not is_regular_form(s))
            if expect.get("nilpotent"):
                _guard(
                    report,
                    "T3",
                    rid,
                    "nilpotent_elements" + sfx,
                    lambda: all(is_nilpotent_element(p) for p in probe_elements(s)),
                )
            if "branch" in expect:
                want = Branch(expect["branch"])

                def branch_check():
                    got = lemma5_branch(s)
                    return got is want, f"got {got.value}"

                _guard(report, "T3", rid, "borel_shape" + sfx, branch_check)
            if e.get("cartan"):
                h = parse_element(e.text("cartan"))
                _guard(report, "T3", rid, "contains_cartan" + sfx, lambda: h in s)
            if e.get("generic") or e.get("label") or e.get("pencil"):
                _guard(report, "T3", rid, "orbit_labels" + sfx, lambda: _orbit_labels(e, s))
            link = links.get(int(rid))
            if link is not None:
                target = _subspace(link.text("normalizer"), lam)
                want_dim = int(link.get("dim"))

                def norm_check():
                    n = normalizer(s)
                    return n == target and n.dim == want_dim, f"dim {n.dim}"

                _guard(report, "T3", rid, "normalizer" + sfx, norm_check)
    dupes = [(a, b) for (a, sa), (b, sb) in combinations(seen, 2) if sa == sb]
    report.add("T3", "all", "pairwise_distinct", not dupes, f"{len(dupes)} equal pairs")
    distinct_rows = len(load_table("T3"))
    report.add("T3", "all", "row_count", distinct_rows == 49, f"{distinct_rows} rows")


def _orbit_labels(e: CatalogEntry, s: Subspace):
    labels = []
    for raw in e.values("label"):
        expr, name = shlex.split(raw)
        labels.append((parse_element(expr), ORBIT_BY_NAME[name]))
    pencils = []
    for raw in e.values("pencil"):
        u, v, name, count = shlex.split(raw)
        pencils.append((parse_element(u), parse_element(v), ORBIT_BY_NAME[name], int(count)))
    generic = ORBIT_BY_NAME[e.get("generic")] if e.get("generic") else None
    rep = verify_corollary1_entry(s, labels, generic, pencils)
    bad = rep.failures()
    return not bad, "; ".join(f"{n}: {d}" for n, _, d in bad)


def _triple(e: CatalogEntry) -> Sl2Triple:
    return Sl2Triple(
        parse_element(e.text("f")), parse_element(e.text("e_plus")), parse_element(e.text("e_minus"))
    )


def _verify_triple_entry(report, tid, e):
    t = _triple(e)

    def relations():
        check = verify_triple(t)
        return check.ok, ", ".join(check.failing)

    if not _guard(report, tid, e.row_id, "sl2_relations", relations):
        return None
    if e.get("index"):
        want = Fraction(e.get("index"))
        _guard(report, tid, e.row_id, "dynkin_index", lambda: (dynkin_index(t) == want, f"got {dynkin_index(t)}"))
    return t


def _verify_t2(report):
    for e in load_table("T2"):
        t = _verify_triple_entry(report, "T2", e)
        if t is not None:
            _guard(
                report,
                "T2",
                e.row_id,
                "not_regular_form",
                lambda: not is_regular_form(t.span()),
            )


def _verify_t20(report):
    for e in load_table("T20"):
        x = parse_element(e.text("element"))
        want = int(e.get("orbit_dim"))

        def check():
            r = ad_rank(x)
            label = classify_nilpotent(x)
            return r == want and label.name == e.row_id, f"rank {r}, label {label.name}"

        _guard(report, "T20", e.row_id, "orbit_dim", check)


def _verify_t10(report):
    for e in load_table("T10"):
        s = _subspace(e.text("gens"))
        want = int(e.get("row"))

        def check():
            sig = match_table10_schema(s)
            return sig.row == want, f"matched row {sig.row}"

        _guard(report, "T10", e.row_id, "schema", check)


def _verify_t40(report):
    for e in load_table("T40"):
        for lam in e.lambdas():
            s = _subspace(e.text("subalgebra"), lam)
            target = _subspace(e.text("normalizer"), lam)
            want = int(e.get("dim"))

            def check():
                n = normalizer(s)
                return n == target and n.dim == want, f"dim {n.dim}"

            _guard(report, "T40", e.row_id, "normalizer" + _suffix(lam), check)
            if e.get("listed_normalizer"):
                listed = _subspace(e.text("listed_normalizer"), lam)

                def erratum():
                    n = normalizer(s)
                    refuted = listed != n and n.contains_space(listed)
                    return refuted, f"listed dim {e.get('listed_dim')}, computed {n.dim}"

                _guard(report, "T40", e.row_id, "listed_value_corrected" + _suffix(lam), erratum)


def _verify_prop1(report):
    e = entry("PROP1", "counts")
    want = {int(k): int(v) for k, v in (p.split(":") for p in e.get("dims").split(","))}
    got = counts_by_dimension()
    report.add("PROP1", "counts", "per_dimension", got == want, f"got {got}")
    total = total_regular_types()
    report.add("PROP1", "counts", "total", total == int(e.get("total")), f"got {total}")
    classes = {c.canonical_spec: c for c in classify_regular_types()}
    for e in load_table("PROP1"):
        if e.row_id == "counts":
            continue
        roots = [_root_of(x) for x in parse_elements(e.text("roots"))]
        l_type = LType(e.get("cartan", "h"))
        spec = canonical_spec(RegularSpec(mask_of(roots), l_type))

        def check():
            c = classes.get(spec)
            if c is None:
                return False, "not among the enumerated types"
            ok = c.levi_dim == int(e.get("levi_dim")) and c.radical_dim == int(e.get("radical_dim"))
            return ok, f"dim {c.dimension}, levi {c.levi_dim}, radical {c.radical_dim}"

        _guard(report, "PROP1", e.row_id, "regular_type", check)


def _root_of(x):
    support = x.support()
    if len(support) != 1 or support[0] < H_OFFSET:
        raise CatalogError(f"{x} is not a single root vector")
    return ROOTS[support[0] - H_OFFSET]


def _verify_prop2(report):
    for e in load_table("PROP2"):
        rid = e.row_id
        if e.get("f"):
            t = _verify_triple_entry(report, "PROP2", e)
            if t is None:
                continue
            sub = t.span()
            gens = [t.f, t.e_plus, t.e_minus]
            if e.get("spins"):
                want = {Fraction(k): int(v) for k, v in (p.split(":") for p in e.get("spins").split(","))}

                def spins():
                    rep = decompose_under_sl2(t)
                    return rep.multiplicities == want and rep.total_dim_check == 14, rep.as_text()

                _guard(report, "PROP2", rid, "spins", spins)
        else:
            sub = _subspace(e.text("subalgebra"))
            gens = list(sub.basis)
            _guard(report, "PROP2", rid, "subalgebra", lambda: is_subalgebra(sub))
        parts = [sub]
        for k, raw in enumerate(e.values("summand"), start=1):
            basis, dim, kind = shlex.split(raw)
            w = _subspace(basis)
            parts.append(w)

            def module(w=w, dim=int(dim), kind=kind):
                check = verify_submodule(gens, w, dim, trivial=kind == "trivial")
                return check.ok, check.failed or kind

            _guard(report, "PROP2", rid, f"summand_{k}", module)

        def direct_sum():
            c = check_direct_sum(parts)
            return c.ok, f"dims sum to {c.total_dim}, span {c.span_dim}"

        _guard(report, "PROP2", rid, "direct_sum", direct_sum)
        if e.get("grid"):
            hs_text, first, _, second = shlex.split(e.get("grid"))
            hs = parse_elements(hs_text)
            want = sorted(
                (Fraction(a), Fraction(b)) for a in first.split(",") for b in second.split(",")
            )

            def grid():
                got = joint_weights(parts[1], hs)
                got = sorted(tuple(c.rational() for c in w) for w in got) if got else None
                return got == want, f"{len(got or [])} weights"

            _guard(report, "PROP2", rid, "weight_grid", grid)
        if e.get("weight_vector"):
            v = parse_element(e.text("weight_vector"))

            def weight_vector():
                in_part = any(v in p for p in parts[1:])
                image = bracket(gens[0], v)
                col = next(i for i, c in enumerate(v.coords) if c)
                return in_part and image == v * (image.coords[col] / v.coords[col]), ""

            _guard(report, "PROP2", rid, "weight_vector", weight_vector)


_VERIFIERS = {
    "T2": _verify_t2,
    "T3": _verify_t3,
    "T10": _verify_t10,
    "T20": _verify_t20,
    "T40": _verify_t40,
    "PROP1": _verify_prop1,
    "PROP2": _verify_prop2,
}


def verify_table(table_id: str) -> VerificationReport:
    if table_id not in _VERIFIERS:
        raise KeyError(f"unknown table {table_id!r}")
    report = VerificationReport()
    _VERIFIERS[table_id](report)
    return report


def conjugation_witnesses() -> VerificationReport:
    report = VerificationReport()
    for w in all_witnesses():
        report.add("WIT", w.name, "identity", Status(w.status), w.detail)
    return report


def verify_all() -> VerificationReport:
    report = VerificationReport()
    for tid in TABLE_IDS:
        report.extend(verify_table(tid))
    return report.extend(conjugation_witnesses())


def theorem1_counts() -> tuple[int, int, int]:
    """(regular types, nonregular semisimple, nonregular solvable)."""
    return total_regular_types(), len(load_table("T2")), len(load_table("T3"))


__all__ = [
    "CatalogEntry",
    "CatalogError",
    "Record",
    "Status",
    "TABLE_IDS",
    "VerificationReport",
    "conjugation_witnesses",
    "entry",
    "load_table",
    "parse_catalog",
    "roundtrip_failures",
    "theorem1_counts",
    "verify_all",
    "verify_table",
]
