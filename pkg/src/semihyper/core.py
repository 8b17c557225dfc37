"""Finite semihyperring tables: subset arithmetic and axiom verification.

A structure of order n is given by an n x n hyperaddition table whose cells
are nonempty subsets of the carrier, a single-valued n x n multiplication
table, a distinguished zero, and an optional unity.  Elements are the
indices 0..n-1; subsets of the carrier are ``frozenset`` instances.
"""

from __future__ import annotations

from dataclasses import dataclass

Subset = frozenset

DEFAULT_ENUM_CAP = 16


class StructureError(ValueError):
    """Table is structurally malformed: bad shape, bad index, or empty add cell."""


class EmptyOperandError(ValueError):
    """A subset operation received an empty operand."""


class HypothesisError(ValueError):
    """A hypothesis of the operation is unmet (e.g. no unity declared)."""


class SizeLimitError(ValueError):
    """Carrier exceeds the configured enumeration cap."""


class PreconditionError(ValueError):
    """An argument violates the operation's precondition."""


class InvalidStructureError(ValueError):
    """Refused to operate on a structure that fails axiom verification."""

    def __init__(self, message: str, report: "AxiomReport"):
        super().__init__(message)
        self.report = report


ADD_COMMUTATIVITY = "add-commutativity"
ADD_IDENTITY = "add-identity"
ADD_ASSOCIATIVITY = "add-associativity"
MUL_ASSOCIATIVITY = "mul-associativity"
LEFT_DISTRIBUTIVITY = "left-distributivity"
RIGHT_DISTRIBUTIVITY = "right-distributivity"
ZERO_ABSORBING = "zero-absorbing"
UNITY_LAW = "unity"

AXIOM_ORDER = (
    ADD_COMMUTATIVITY,
    ADD_IDENTITY,
    ADD_ASSOCIATIVITY,
    MUL_ASSOCIATIVITY,
    LEFT_DISTRIBUTIVITY,
    RIGHT_DISTRIBUTIVITY,
    ZERO_ABSORBING,
    UNITY_LAW,
)


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    ok: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts with the first witness of each failure."""

    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)

    def first_failure(self) -> AxiomCheck | None:
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def render(self, structure: "Semihyperring") -> str:
        lines = []
        for c in self.checks:
            if c.ok:
                lines.append(f"{c.axiom}: PASS")
            else:
                names = ",".join(structure.labels[i] for i in c.witness)
                lines.append(f"{c.axiom}: FAIL at ({names})")
        return "\n".join(lines)


def _witness_add_commutativity(add, n):
    for x in range(n):
        row = add[x]
        for y in range(x + 1, n):
            if row[y] != add[y][x]:
                return (x, y)
    return None


def _witness_add_identity(add, zero, n):
    row = add[zero]
    for x in range(n):
        if row[x] != frozenset((x,)):
            return (x,)
    return None


def _witness_add_associativity(add, n):
    for x in range(n):
        for y in range(n):
            xy = add[x][y]
            for z in range(n):
                left = frozenset().union(*(add[t][z] for t in xy))
                right = frozenset().union(*(add[x][t] for t in add[y][z]))
                if left != right:
                    return (x, y, z)
    return None


def _witness_mul_associativity(mul, n):
    for x in range(n):
        for y in range(n):
            xy = mul[x][y]
            for z in range(n):
                if mul[xy][z] != mul[x][mul[y][z]]:
                    return (x, y, z)
    return None


def _witness_left_distributivity(add, mul, n):
    # x*(y+z) compared with x*y + x*z, both as subsets
    for x in range(n):
        mx = mul[x]
        for y in range(n):
            for z in range(n):
                left = frozenset(mx[t] for t in add[y][z])
                if left != add[mx[y]][mx[z]]:
                    return (x, y, z)
    return None


def _witness_right_distributivity(add, mul, n):
    # (x+y)*z compared with x*z + y*z
    for x in range(n):
        for y in range(n):
            xy = add[x][y]
            for z in range(n):
                left = frozenset(mul[t][z] for t in xy)
                if left != add[mul[x][z]][mul[y][z]]:
                    return (x, y, z)
    return None


def _witness_zero_absorbing(mul, zero, n):
    for x in range(n):
        if mul[x][zero] != zero or mul[zero][x] != zero:
            return (x,)
    return None


def _witness_unity(mul, unity, n):
    for x in range(n):
        if mul[unity][x] != x or mul[x][unity] != x:
            return (x,)
    return None


def verify_tables(add, mul, zero, unity, n) -> AxiomReport:
    """Run every axiom scan over normalized tables; first witness per failure."""
    checks = [
        AxiomCheck(ADD_COMMUTATIVITY, *_verdict(_witness_add_commutativity(add, n))),
        AxiomCheck(ADD_IDENTITY, *_verdict(_witness_add_identity(add, zero, n))),
        AxiomCheck(ADD_ASSOCIATIVITY, *_verdict(_witness_add_associativity(add, n))),
        AxiomCheck(MUL_ASSOCIATIVITY, *_verdict(_witness_mul_associativity(mul, n))),
        AxiomCheck(LEFT_DISTRIBUTIVITY, *_verdict(_witness_left_distributivity(add, mul, n))),
        AxiomCheck(RIGHT_DISTRIBUTIVITY, *_verdict(_witness_right_distributivity(add, mul, n))),
        AxiomCheck(ZERO_ABSORBING, *_verdict(_witness_zero_absorbing(mul, zero, n))),
    ]
    if unity is not None:
        checks.append(AxiomCheck(UNITY_LAW, *_verdict(_witness_unity(mul, unity, n))))
    return AxiomReport(tuple(checks))


def _verdict(witness):
    return (witness is None, witness)


def subset_sort_key(A):
    """Canonical subset order: by size, then lexicographically by indices."""
    return (len(A), tuple(sorted(A)))


class Semihyperring:
    """A finite semihyperring given by explicit operation tables.

    Tables are normalized and structurally validated at construction
    (``StructureError`` on malformed input); the axiom scan then runs once
    and is cached, so ``is_valid`` and ``axiom_report`` are free afterwards.
    Instances are immutable by contract and all operations are pure, so
    concurrent readers are safe.
    """

    __slots__ = ("order", "add", "mul", "zero", "unity", "name", "labels",
                 "carrier", "_axioms", "_cache")

    def __init__(self, add, mul, zero=0, unity=None, name="R", labels=None):
        order = len(add)
        if order == 0:
            raise StructureError("carrier must be nonempty")
        norm_add = []
        for x, row in enumerate(add):
            row = list(row)
            if len(row) != order:
                raise StructureError(f"add row {x} has length {len(row)}, expected {order}")
            cells = []
            for y, cell in enumerate(row):
                s = frozenset(cell)
                if not s:
                    raise StructureError(f"empty hyperaddition cell at ({x},{y})")
                for t in s:
                    if not isinstance(t, int) or not 0 <= t < order:
                        raise StructureError(f"add cell ({x},{y}) contains bad index {t!r}")
                cells.append(s)
            norm_add.append(tuple(cells))
        norm_mul = []
        for x, row in enumerate(mul):
            row = list(row)
            if len(row) != order:
                raise StructureError(f"mul row {x} has length {len(row)}, expected {order}")
            for y, t in enumerate(row):
                if not isinstance(t, int) or not 0 <= t < order:
                    raise StructureError(f"mul cell ({x},{y}) contains bad index {t!r}")
            norm_mul.append(tuple(row))
        if not isinstance(zero, int) or not 0 <= zero < order:
            raise StructureError(f"zero index {zero!r} out of range")
        if unity is not None and (not isinstance(unity, int) or not 0 <= unity < order):
            raise StructureError(f"unity index {unity!r} out of range")
        if labels is None:
            labels = tuple(f"e{i}" for i in range(order))
        else:
            labels = tuple(str(l) for l in labels)
            if len(labels) != order:
                raise StructureError(f"{len(labels)} labels for order {order}")
            if len(set(labels)) != order:
                raise StructureError("element labels must be distinct")

        self.order = order
        self.add = tuple(norm_add)
        self.mul = tuple(norm_mul)
        self.zero = zero
        self.unity = unity
        self.name = str(name)
        self.labels = labels
        self.carrier = frozenset(range(order))
        self._cache = {}
        self._axioms = verify_tables(self.add, self.mul, self.zero, self.unity, order)

    # -- introspection -------------------------------------------------

    @property
    def axiom_report(self) -> AxiomReport:
        return self._axioms

    @property
    def is_valid(self) -> bool:
        return self._axioms.ok

    def elements(self):
        return range(self.order)

    def require_valid(self, operation: str = "operation"):
        if not self._axioms.ok:
            first = self._axioms.first_failure()
            raise InvalidStructureError(
                f"{operation} requires a valid semihyperring; "
                f"axiom {first.axiom} fails", self._axioms)

    def index_of(self, label: str) -> int:
        table = self._cache.get("label_index")
        if table is None:
            table = {l: i for i, l in enumerate(self.labels)}
            self._cache["label_index"] = table
        return table[label]

    def subset_repr(self, A) -> str:
        return "{" + ",".join(self.labels[i] for i in sorted(A)) + "}"

    def __repr__(self):
        return f"<Semihyperring {self.name} order={self.order}>"

    def __eq__(self, other):
        if not isinstance(other, Semihyperring):
            return NotImplemented
        return (self.order == other.order and self.add == other.add
                and self.mul == other.mul and self.zero == other.zero
                and self.unity == other.unity and self.labels == other.labels)

    __hash__ = None

    def same_tables(self, other: "Semihyperring") -> bool:
        return (self.order == other.order and self.add == other.add
                and self.mul == other.mul and self.zero == other.zero
                and self.unity == other.unity)

    # -- subset arithmetic ---------------------------------------------

    def subset_add(self, A, B) -> Subset:
        """Union of the add cells over all pairs from A x B."""
        if not A or not B:
            raise EmptyOperandError("subset_add requires nonempty operands")
        out = set()
        for a in A:
            row = self.add[a]
            for b in B:
                out |= row[b]
        return frozenset(out)

    def subset_mul(self, A, B) -> Subset:
        """Elementwise image of the single-valued product over A x B."""
        if not A or not B:
            raise EmptyOperandError("subset_mul requires nonempty operands")
        out = set()
        for a in A:
            row = self.mul[a]
            for b in B:
                out.add(row[b])
        return frozenset(out)

    def finite_sums_closure(self, P) -> Subset:
        """Least superset of P closed under adding one more element of P.

        By additive associativity this is exactly the set of elements that
        occur in some finite sum of elements of P.
        """
        if not P:
            raise EmptyOperandError("finite_sums_closure requires a nonempty set")
        closed = set(P)
        frontier = list(P)
        while frontier:
            x = frontier.pop()
            row = self.add[x]
            for p in P:
                for t in row[p]:
                    if t not in closed:
                        closed.add(t)
                        frontier.append(t)
        return frozenset(closed)

    def units(self) -> Subset:
        """Elements with a two-sided multiplicative inverse."""
        if self.unity is None:
            raise HypothesisError("units are defined only when a unity is declared")
        u = self.unity
        out = set()
        for x in range(self.order):
            row = self.mul[x]
            for y in range(self.order):
                if row[y] == u and self.mul[y][x] == u:
                    out.add(x)
                    break
        return frozenset(out)


def verify_axioms(S: Semihyperring) -> AxiomReport:
    """The cached construction-time axiom report of S."""
    return S.axiom_report
