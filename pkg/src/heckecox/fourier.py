"""Non-abelian Fourier coefficients on M(G) for small fixture groups.

A fixture lists a multiplication table, one representative per conjugacy
class, and for each representative the full character table of its
centralizer. File grammar (line oriented, ``#`` starts a comment)::

    order <N>
    identity <index>
    names <name_0> ... <name_{N-1}>        # optional
    mult
    <N rows of N element indices; row i, column j is i*j>
    class <rep>
    centralizer <element indices of C(rep)>
    char <value per centralizer element>   # one line per irreducible
    ...

Character values are rationals (``1/2``) or sums of roots of unity in GAP
notation (``E(3)^2``, ``-1-E(4)``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .cyclotomic import Cyclotomic, E, parse_cyclotomic

__all__ = [
    "GroupData",
    "MClass",
    "FixtureError",
    "parse_fixture",
    "load_fixture",
    "FIXTURES",
    "check_group",
    "m_gamma",
    "pairing",
    "pairing_of_pairs",
    "fourier_matrix",
    "omega",
    "conjugate_pair",
    "pair_orbits",
]

FIXTURES = ("trivial", "z2", "z2xz2", "s3")


class FixtureError(ValueError):
    """Malformed fixture file or invalid group data."""


@dataclass(frozen=True)
class GroupData:
    order: int
    mult: tuple[tuple[int, ...], ...]
    identity: int
    class_reps: tuple[int, ...]
    centralizers: dict[int, tuple[int, ...]]
    centralizer_chars: dict[int, tuple[tuple[Cyclotomic, ...], ...]] = field(repr=False)
    names: tuple[str, ...] = ()

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inverse(self, a: int) -> int:
        row = self.mult[a]
        return row.index(self.identity)

    def conj(self, h: int, x: int) -> int:
        """h x h^-1"""
        return self.mult[self.mult[h][x]][self.inverse(h)]

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def centralizer_of(self, x: int) -> tuple[int, ...]:
        return tuple(g for g in range(self.order) if self.mult[g][x] == self.mult[x][g])

    def class_of(self, x: int) -> frozenset[int]:
        return frozenset(self.conj(h, x) for h in range(self.order))

    def character(self, x: int, sigma: int) -> dict[int, Cyclotomic]:
        """Character ``sigma`` of C(x) for a class representative ``x``."""
        return dict(zip(self.centralizers[x], self.centralizer_chars[x][sigma]))


@dataclass(frozen=True, order=True)
class MClass:
    x: int
    sigma: int


def parse_fixture(text: str) -> GroupData:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    order = identity = None
    names: tuple[str, ...] = ()
    mult: list[tuple[int, ...]] = []
    reps: list[int] = []
    cents: dict[int, tuple[int, ...]] = {}
    chars: dict[int, list[tuple[Cyclotomic, ...]]] = {}
    i = 0
    try:
        while i < len(lines):
            key, _, rest = lines[i].partition(" ")
            i += 1
            if key == "order":
                order = int(rest)
            elif key == "identity":
                identity = int(rest)
            elif key == "names":
                names = tuple(rest.split())
            elif key == "mult":
                if order is None:
                    raise FixtureError("'order' must precede 'mult'")
                for _ in range(order):
                    mult.append(tuple(int(t) for t in lines[i].split()))
                    i += 1
            elif key == "class":
                reps.append(int(rest))
                chars[reps[-1]] = []
            elif key == "centralizer":
                cents[reps[-1]] = tuple(int(t) for t in rest.split())
            elif key == "char":
                chars[reps[-1]].append(tuple(parse_cyclotomic(t) for t in rest.split()))
            else:
                raise FixtureError(f"unknown directive {key!r}")
    except (IndexError, ValueError) as exc:
        if isinstance(exc, FixtureError):
            raise
        raise FixtureError(f"malformed fixture near line {i}: {exc}") from exc
    if order is None or identity is None or not mult:
        raise FixtureError("fixture needs 'order', 'identity' and 'mult'")
    if names and len(names) != order:
        raise FixtureError("'names' must list one name per element")
    return GroupData(
        order=order,
        mult=tuple(mult),
        identity=identity,
        class_reps=tuple(reps),
        centralizers=cents,
        centralizer_chars={x: tuple(v) for x, v in chars.items()},
        names=names,
    )


def load_fixture(name_or_path: str | Path) -> GroupData:
    """Load a shipped fixture by name (``"z2"``) or any fixture file by path."""
    if str(name_or_path) in FIXTURES:
        text = resources.files("heckecox").joinpath(f"fixtures/{name_or_path}.txt").read_text()
    else:
        text = Path(name_or_path).read_text()
    g = parse_fixture(text)
    check_group(g)
    return g


def _inner(g_elems, chi, psi) -> Cyclotomic:
    total = Cyclotomic.coerce(0)
    for a, b in zip(chi, psi):
        total = total + a * b.conjugate()
    return total * Fraction(1, len(g_elems))


def check_group(g: GroupData) -> None:
    """Brute-force validation of the group law and the centralizer tables."""
    n = g.order
    rng = range(n)
    if len(g.mult) != n or any(len(r) != n for r in g.mult):
        raise FixtureError("multiplication table is not order x order")
    if any(not 0 <= c < n for r in g.mult for c in r):
        raise FixtureError("multiplication table entry out of range")
    e = g.identity
    if any(g.mult[e][a] != a or g.mult[a][e] != a for a in rng):
        raise FixtureError(f"{e} is not a two-sided identity")
    if any(e not in g.mult[a] for a in rng):
        raise FixtureError("some element has no inverse")
    for a in rng:
        for b in rng:
            ab = g.mult[a][b]
            for c in rng:
                if g.mult[ab][c] != g.mult[a][g.mult[b][c]]:
                    raise FixtureError(f"associativity fails at ({a}, {b}, {c})")
    seen: set[int] = set()
    for x in g.class_reps:
        cls = g.class_of(x)
        if seen & cls:
            raise FixtureError(f"representative {x} repeats a conjugacy class")
        seen |= cls
        cent = g.centralizers.get(x)
        if cent is None or set(cent) != set(g.centralizer_of(x)) or len(cent) != len(set(cent)):
            raise FixtureError(f"centralizer of {x} is wrong")
        sub_classes = {frozenset(g.conj(h, y) for h in cent) for y in cent}
        table = g.centralizer_chars[x]
        if len(table) != len(sub_classes):
            raise FixtureError(
                f"C({x}) has {len(sub_classes)} classes but {len(table)} characters were given"
            )
        for i, chi in enumerate(table):
            if len(chi) != len(cent):
                raise FixtureError(f"character {i} of C({x}) has the wrong length")
            for j, psi in enumerate(table):
                if _inner(cent, chi, psi) != (1 if i == j else 0):
                    raise FixtureError(f"characters {i}, {j} of C({x}) fail orthogonality")
    if len(seen) != n:
        raise FixtureError("class representatives do not cover the group")


def m_gamma(g: GroupData) -> list[MClass]:
    """One representative pair per class of M(G), in fixture order."""
    return [MClass(x, s) for x in g.class_reps for s in range(len(g.centralizer_chars[x]))]


Pair = tuple[int, dict[int, Cyclotomic]]


def pairing_of_pairs(g: GroupData, c: Pair, d: Pair) -> Cyclotomic:
    """The Fourier coefficient for explicit pairs ``(x, sigma)``, ``(y, tau)``."""
    x, sigma = c
    y, tau = d
    total = Cyclotomic.coerce(0)
    for h in range(g.order):
        hyh = g.conj(h, y)
        if g.mul(x, hyh) != g.mul(hyh, x):
            continue
        hxh = g.conj(g.inverse(h), x)
        total = total + sigma[hyh] * tau[hxh].conjugate()
    return total * Fraction(1, len(g.centralizer_of(x)) * len(g.centralizer_of(y)))


def pairing(c: MClass, d: MClass, g: GroupData) -> Cyclotomic:
    return pairing_of_pairs(g, (c.x, g.character(c.x, c.sigma)), (d.x, g.character(d.x, d.sigma)))


def fourier_matrix(g: GroupData) -> list[list[Cyclotomic]]:
    classes = m_gamma(g)
    return [[pairing(c, d, g) for d in classes] for c in classes]


def omega(c: MClass, g: GroupData, exceptional: bool = False) -> Cyclotomic:
    """Root of unity sigma(x)/sigma(1), times i for exceptional families with x != 1."""
    sigma = g.character(c.x, c.sigma)
    value = sigma[c.x] * (1 / sigma[g.identity].as_fraction())
    if exceptional and c.x != g.identity:
        value = value * E(4)
    return value


def conjugate_pair(g: GroupData, pair: Pair, h: int) -> Pair:
    """``(h x h^-1, sigma o conj(h^-1))``."""
    x, sigma = pair
    return g.conj(h, x), {g.conj(h, z): val for z, val in sigma.items()}


def _same_char(a: dict[int, Cyclotomic], b: dict[int, Cyclotomic]) -> bool:
    return a.keys() == b.keys() and all(a[k] == b[k] for k in a)


def pair_orbits(g: GroupData) -> list[list[Pair]]:
    """Brute-force orbits of G on all pairs (x, sigma), sigma in Irr C(x).

    Characters of non-representative centralizers are transported from the
    representative by conjugation.
    """
    pairs: list[Pair] = []
    for x in g.class_reps:
        for s in range(len(g.centralizer_chars[x])):
            base = (x, g.character(x, s))
            for h in range(g.order):
                cand = conjugate_pair(g, base, h)
                if not any(p[0] == cand[0] and _same_char(p[1], cand[1]) for p in pairs):
                    pairs.append(cand)
    orbits: list[list[Pair]] = []
    placed = [False] * len(pairs)
    for i, p in enumerate(pairs):
        if placed[i]:
            continue
        orbit = []
        for h in range(g.order):
            q = conjugate_pair(g, p, h)
            for j, r in enumerate(pairs):
                if not placed[j] and r[0] == q[0] and _same_char(r[1], q[1]):
                    placed[j] = True
                    orbit.append(r)
        orbits.append(orbit)
    return orbits
