"""Finite commutative monoids as validated multiplication tables.

Elements are dense 0-based indices into the table.  Cyclic monoids
C_{m,q} (index m, period q) come with the wrap arithmetic ``cyclic_p``
and the wrap counter ``cyclic_s``.  The infinite cyclic monoid (N, +)
is a separate marker object, not a table.
"""

import json


class MonoidError(ValueError):
    pass


class FiniteCommutativeMonoid:
    """Immutable multiplication table with a two-sided identity."""

    __slots__ = ("size", "identity", "table")

    def __init__(self, size, identity, table):
        self.size = size
        self.identity = identity
        self.table = tuple(tuple(row) for row in table)

    def op(self, x, y):
        return self.table[x][y]

    def elements(self):
        return range(self.size)

    def nonunit(self):
        return [x for x in range(self.size) if x != self.identity]

    def __eq__(self, other):
        return (isinstance(other, FiniteCommutativeMonoid)
                and self.size == other.size
                and self.identity == other.identity
                and self.table == other.table)

    def __hash__(self):
        return hash((self.size, self.identity, self.table))

    def __repr__(self):
        return "FiniteCommutativeMonoid(size=%d, identity=%d)" % (self.size, self.identity)


class InfiniteCyclicMonoid:
    """The additive monoid of natural numbers; only `cyclic` accepts it."""

    __slots__ = ()
    identity = 0

    def op(self, x, y):
        return x + y

    def __repr__(self):
        return "InfiniteCyclicMonoid()"

    def __eq__(self, other):
        return isinstance(other, InfiniteCyclicMonoid)

    def __hash__(self):
        return hash("InfiniteCyclicMonoid")


INFINITE_CYCLIC = InfiniteCyclicMonoid()


def validate_table(size, identity, table):
    """Build a FiniteCommutativeMonoid, checking the unit, commutativity
    and associativity laws.  Raises MonoidError with a witness for the
    first violated law."""
    if size <= 0:
        raise MonoidError("size must be positive, got %r" % (size,))
    if len(table) != size or any(len(row) != size for row in table):
        raise MonoidError("table must be %dx%d" % (size, size))
    if not (0 <= identity < size):
        raise MonoidError("identity %r out of range" % (identity,))
    for x in range(size):
        for y in range(size):
            v = table[x][y]
            if not (isinstance(v, int) and 0 <= v < size):
                raise MonoidError("entry table[%d][%d]=%r out of range" % (x, y, v))
    e = identity
    for x in range(size):
        if table[e][x] != x or table[x][e] != x:
            raise MonoidError("unit law fails at x=%d: e*x=%d, x*e=%d"
                              % (x, table[e][x], table[x][e]))
    for x in range(size):
        for y in range(x + 1, size):
            if table[x][y] != table[y][x]:
                raise MonoidError("commutativity fails at (%d,%d): %d != %d"
                                  % (x, y, table[x][y], table[y][x]))
    for x in range(size):
        for y in range(size):
            xy = table[x][y]
            for z in range(size):
                if table[xy][z] != table[x][table[y][z]]:
                    raise MonoidError("associativity fails at (%d,%d,%d)" % (x, y, z))
    return FiniteCommutativeMonoid(size, identity, table)


def cyclic_p(m, q, x):
    """The retraction N -> C_{m,q}: identity below m+q, then reduce by
    multiples of q back into [m, m+q)."""
    if x < m + q:
        return x
    return m + (x - m) % q


def make_cyclic(m, q):
    """The cyclic monoid C_{m,q} on {0,...,m+q-1} with x(+)y = p(x+y)."""
    if m < 0 or q < 1:
        raise MonoidError("need index m >= 0 and period q >= 1, got (%r, %r)" % (m, q))
    if m + q < 2:
        raise MonoidError("the zero monoid (m+q < 2) is excluded")
    n = m + q
    table = [[cyclic_p(m, q, x + y) for y in range(n)] for x in range(n)]
    return FiniteCommutativeMonoid(n, 0, table)


def cyclic_s(m, q, x, y):
    """Number of period wraps in x+y: ((x+y) - (x(+)y)) / q."""
    return (x + y - cyclic_p(m, q, x + y)) // q


def monoid_from_descriptor(desc):
    """Parse the JSON monoid descriptor (dict or JSON string)."""
    if isinstance(desc, str):
        desc = json.loads(desc)
    kind = desc.get("kind")
    if kind == "table":
        return validate_table(desc["size"], desc["identity"], desc["table"])
    if kind == "cyclic":
        return make_cyclic(desc["index"], desc["period"])
    if kind == "infinite-cyclic":
        return INFINITE_CYCLIC
    raise MonoidError("unknown monoid descriptor kind: %r" % (kind,))


def monoid_to_descriptor(M):
    if isinstance(M, InfiniteCyclicMonoid):
        return {"kind": "infinite-cyclic"}
    return {"kind": "table", "size": M.size, "identity": M.identity,
            "table": [list(row) for row in M.table]}
