"""Modules over the arrow category of a commutative monoid.

A module assigns a finitely presented abelian group A(x) to every
element x and a translation homomorphism y_*: A(x) -> A(xy) to every
pair, with e_* = id and y_* z_* = (yz)_*.  Groups are presented as
Z^k / column-lattice(relations); homomorphisms are integer matrices
compatible with the relations.

Free modules on a graded basis with projection pi, and the dualization
of basis-level maps into coefficient matrices (the Hom(-, A) functor on
free modules), also live here.
"""

import json

from .monoid import FiniteCommutativeMonoid
from .zlinalg import IntMatrix, AbGroupInvariants, lattice_basis, lattice_contains, snf_diagonal


class FGAbelianGroup:
    """Z^ngens modulo the column lattice of `relations`."""

    __slots__ = ("ngens", "relations", "_rel_lattice")

    def __init__(self, ngens, relations=None):
        self.ngens = ngens
        if relations is None:
            relations = IntMatrix(ngens, 0)
        assert relations.rows == ngens
        self.relations = relations
        self._rel_lattice = lattice_basis(relations)

    @classmethod
    def free(cls, rank):
        return cls(rank)

    @classmethod
    def cyclic(cls, n):
        return cls(1, IntMatrix.from_rows([[n]]))

    @classmethod
    def from_invariants(cls, inv):
        """Canonical presentation Z^free + (+) Z/d: free generators
        first, then one generator per torsion factor."""
        k = inv.free_rank + len(inv.torsion)
        rel = IntMatrix(k, len(inv.torsion))
        for i, d in enumerate(inv.torsion):
            rel.data[inv.free_rank + i][i] = d
        return cls(k, rel)

    def invariants(self):
        diag = snf_diagonal(self.relations)
        return AbGroupInvariants.from_diagonal(diag, free_rank=self.ngens - len(diag))

    def order(self):
        return self.invariants().order()

    def zero(self):
        return [0] * self.ngens

    def is_zero_element(self, vec):
        if all(v == 0 for v in vec):
            return True
        return lattice_contains(self._rel_lattice, vec)

    def elements_equal(self, a, b):
        return self.is_zero_element([x - y for x, y in zip(a, b)])

    def element_list(self):
        """All elements as canonical coset representatives; requires a
        finite group."""
        H = self._rel_lattice
        if H.cols < self.ngens:
            raise ValueError("group is infinite")
        # H is a square staircase; box of representatives below the pivots
        pivs = []
        for j in range(H.cols):
            for i in range(H.rows):
                if H.data[i][j]:
                    pivs.append((i, j))
                    break
        assert len(pivs) == self.ngens
        bounds = [0] * self.ngens
        for i, j in pivs:
            bounds[i] = H.data[i][j]
        reps = [[]]
        for b in bounds:
            reps = [r + [v] for r in reps for v in range(b)]
        return [self.reduce(r) for r in reps]

    def reduce(self, vec):
        """Canonical representative of vec modulo the relation lattice."""
        H = self._rel_lattice
        v = list(vec)
        for j in range(H.cols):
            r = None
            for i in range(H.rows):
                if H.data[i][j]:
                    r = i
                    break
            if r is None:
                continue
            q = v[r] // H.data[r][j]
            if q:
                for i in range(r, H.rows):
                    if H.data[i][j]:
                        v[i] -= q * H.data[i][j]
        return v

    def __eq__(self, other):
        return (isinstance(other, FGAbelianGroup) and self.ngens == other.ngens
                and self.relations == other.relations)

    def __hash__(self):
        return hash((self.ngens, self.relations))

    def __repr__(self):
        return "FGAbelianGroup(%r)" % (self.invariants(),)


class ModuleError(ValueError):
    pass


class HModule:
    """Tabular module over a finite commutative monoid: one presented
    group per element plus all translation matrices."""

    __slots__ = ("monoid", "groups", "actions", "constant")

    def __init__(self, monoid, groups, actions, constant=False):
        self.monoid = monoid
        self.groups = list(groups)
        self.actions = dict(actions)
        self.constant = constant

    def group(self, x):
        return self.groups[x]

    def action(self, x, y):
        """Matrix of y_*: A(x) -> A(xy)."""
        return self.actions[(x, y)]

    def translate(self, x, y, vec):
        return self.action(x, y).mul_vector(vec)


class ConstantModule:
    """Constant coefficients: the same group at every element, identity
    translations.  Works over any monoid, including the infinite cyclic
    one."""

    __slots__ = ("monoid", "_group", "constant")

    def __init__(self, group, monoid=None):
        self.monoid = monoid
        self._group = group
        self.constant = True

    def group(self, x):
        return self._group

    def action(self, x, y):
        return IntMatrix.identity(self._group.ngens)

    def translate(self, x, y, vec):
        return list(vec)


class SampledModule:
    """Coefficient groups known only at finitely many elements, with
    identity translations; used for closed-form computations over the
    infinite cyclic monoid.  Missing sample points raise ModuleError."""

    __slots__ = ("monoid", "samples", "constant")

    def __init__(self, samples, monoid=None):
        self.monoid = monoid
        self.samples = dict(samples)
        self.constant = False

    def group(self, x):
        try:
            return self.samples[x]
        except KeyError:
            raise ModuleError("no coefficient group sampled at element %r" % (x,))

    def action(self, x, y):
        if y == 0:
            return IntMatrix.identity(self.group(x).ngens)
        raise ModuleError("sampled modules carry no non-identity translations")

    def translate(self, x, y, vec):
        if y == 0:
            return list(vec)
        raise ModuleError("sampled modules carry no non-identity translations")


def constant_module(group, monoid=None):
    """The constant module: A(x) = group, all translations the identity."""
    return ConstantModule(group, monoid)


def constant_as_tabular(group, monoid):
    """Constant module materialized as an explicit table (mostly for
    validate_module tests)."""
    n = monoid.size
    ident = IntMatrix.identity(group.ngens)
    actions = {(x, y): ident for x in range(n) for y in range(n)}
    return HModule(monoid, [group] * n, actions, constant=True)


def _matrix_maps_relations(mat, src, tgt):
    # mat * rel_src must land in the relation lattice of tgt
    for j in range(src.relations.cols):
        img = mat.mul_vector(src.relations.column(j))
        if not tgt.is_zero_element(img):
            return False
    return True


def validate_module(module):
    """Check the module laws exhaustively over M^2 (and M^3 for the
    composition law).  Returns a list of violations, empty when valid."""
    M = module.monoid
    if not isinstance(M, FiniteCommutativeMonoid):
        raise ModuleError("validate_module needs a finite base monoid")
    n = M.size
    e = M.identity
    bad = []
    for x in range(n):
        for y in range(n):
            mat = module.action(x, y)
            src = module.group(x)
            tgt = module.group(M.op(x, y))
            if mat.rows != tgt.ngens or mat.cols != src.ngens:
                bad.append(("shape", (x, y)))
                continue
            if not _matrix_maps_relations(mat, src, tgt):
                bad.append(("relations", (x, y)))
    for x in range(n):
        mat = module.action(x, e)
        g = module.group(x)
        ident = IntMatrix.identity(g.ngens)
        for j in range(g.ngens):
            if not g.elements_equal(mat.column(j), ident.column(j)):
                bad.append(("identity", (x,)))
                break
    for x in range(n):
        for y in range(n):
            for z in range(n):
                # z_* y_* = (yz)_* : A(x) -> A(xyz)
                first = module.action(M.op(x, y), z).mul(module.action(x, y))
                second = module.action(x, M.op(y, z))
                tgt = module.group(M.op(M.op(x, y), z))
                for j in range(first.cols):
                    if not tgt.elements_equal(first.column(j), second.column(j)):
                        bad.append(("composition", (x, y, z)))
                        break
                else:
                    continue
                break
    return bad


def zm_as_hmodule(M):
    """The algebra ZM seen as a tabular module: ZM(x) is free on the
    pairs (u, v) with uv = x, and y_*(u, v) = (yu, v)."""
    n = M.size
    bases = []
    index = []
    for x in range(n):
        pairs = [(u, v) for u in range(n) for v in range(n) if M.op(u, v) == x]
        bases.append(pairs)
        index.append({p: i for i, p in enumerate(pairs)})
    groups = [FGAbelianGroup.free(len(bases[x])) for x in range(n)]
    actions = {}
    for x in range(n):
        for y in range(n):
            xy = M.op(x, y)
            mat = IntMatrix(len(bases[xy]), len(bases[x]))
            for col, (u, v) in enumerate(bases[x]):
                mat.data[index[xy][(M.op(y, u), v)]][col] = 1
            actions[(x, y)] = mat
    return HModule(M, groups, actions)


# -- free modules on graded bases ------------------------------------------

class FreeBasis:
    """An ordered list of generators with projection values in M."""

    __slots__ = ("generators", "pi")

    def __init__(self, generators, pi):
        self.generators = tuple(generators)
        assert len(set(self.generators)) == len(self.generators), "duplicate generators"
        self.pi = dict(pi)
        for g in self.generators:
            assert g in self.pi

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


class CochainGroup:
    """Hom of a free module on `basis` into a module A: the direct sum
    of the A(pi s) over the basis, with fixed generator offsets."""

    __slots__ = ("basis", "module", "blocks", "offsets", "total")

    def __init__(self, basis, module):
        self.basis = basis
        self.module = module
        self.blocks = [module.group(basis.pi[g]) for g in basis.generators]
        self.offsets = []
        total = 0
        for g in self.blocks:
            self.offsets.append(total)
            total += g.ngens
        self.total = total

    def relation_matrix(self):
        cols = sum(g.relations.cols for g in self.blocks)
        rel = IntMatrix(self.total, cols)
        c = 0
        for off, g in zip(self.offsets, self.blocks):
            for j in range(g.relations.cols):
                for i in range(g.ngens):
                    rel.data[off + i][c] = g.relations.data[i][j]
                c += 1
        return rel

    def invariants(self):
        parts = [g.invariants() for g in self.blocks]
        free = sum(p.free_rank for p in parts)
        tors = [d for p in parts for d in p.torsion]
        return AbGroupInvariants.from_diagonal(tors, free_rank=free)


def hom_realization(basis, module):
    return CochainGroup(basis, module)


class PiMismatchError(ValueError):
    pass


def dualize(d, source, target, module, monoid):
    """Matrix of f |-> f . d from hom(source, A) to hom(target, A).

    d maps each target generator to a formal combination (a dict
    (u, source_generator) -> coefficient) with u * pi(source_generator)
    equal to pi(target generator) for every term.
    """
    src = CochainGroup(source, module)
    tgt = CochainGroup(target, module)
    src_index = {g: i for i, g in enumerate(source.generators)}
    mat = IntMatrix(tgt.total, src.total)
    for ti, tgen in enumerate(target.generators):
        chain = d.get(tgen, {})
        toff = tgt.offsets[ti]
        tpi = target.pi[tgen]
        for (u, sgen), coeff in chain.items():
            if coeff == 0:
                continue
            si = src_index[sgen]
            spi = source.pi[sgen]
            if monoid.op(u, spi) != tpi:
                raise PiMismatchError(
                    "term %r of d(%r): u*pi(s) = %r but pi(t) = %r"
                    % ((u, sgen), tgen, monoid.op(u, spi), tpi))
            act = module.action(spi, u)
            soff = src.offsets[si]
            for i in range(act.rows):
                row = mat.data[toff + i]
                arow = act.data[i]
                for j in range(act.cols):
                    if arow[j]:
                        row[soff + j] += coeff * arow[j]
    return mat


# -- descriptors -------------------------------------------------------------

def group_from_descriptor(desc):
    inv = AbGroupInvariants(desc.get("free_rank", 0), tuple(desc.get("torsion", ())))
    return FGAbelianGroup.from_invariants(inv)


def module_from_descriptor(desc, monoid):
    if isinstance(desc, str):
        desc = json.loads(desc)
    kind = desc.get("kind")
    if kind == "constant":
        return constant_module(group_from_descriptor(desc["group"]), monoid)
    if kind == "tabular":
        if not isinstance(monoid, FiniteCommutativeMonoid):
            raise ModuleError("tabular modules need a finite monoid")
        n = monoid.size
        groups = []
        for x in range(n):
            key = str(x)
            if key not in desc["groups"]:
                raise ModuleError("tabular module missing group at element %d" % x)
            groups.append(group_from_descriptor(desc["groups"][key]))
        actions = {}
        for x in range(n):
            for y in range(n):
                key = "%d,%d" % (x, y)
                if key not in desc["actions"]:
                    raise ModuleError("tabular module missing action %s" % key)
                rows = desc["actions"][key]
                tgt = groups[monoid.op(x, y)]
                src = groups[x]
                actions[(x, y)] = IntMatrix(tgt.ngens, src.ngens, rows)
        mod = HModule(monoid, groups, actions)
        bad = validate_module(mod)
        if bad:
            raise ModuleError("tabular module violates the module laws: %r" % (bad[:3],))
        return mod
    raise ModuleError("unknown coefficient descriptor kind: %r" % (kind,))


def parse_group_shorthand(text):
    """Coefficient shorthand: Z, Z/n, Z^r, and + - separated sums such
    as Z/2+Z/4 or Z^2+Z/3."""
    free = 0
    torsion = []
    for part in text.split("+"):
        part = part.strip()
        if part == "Z":
            free += 1
        elif part.startswith("Z^"):
            free += int(part[2:])
        elif part.startswith("Z/"):
            n = int(part[2:])
            if n < 1:
                raise ModuleError("bad torsion order %r" % (part,))
            if n > 1:
                torsion.append(n)
        else:
            raise ModuleError("cannot parse coefficient shorthand %r" % (part,))
    inv = AbGroupInvariants.from_diagonal(torsion, free_rank=free)
    return FGAbelianGroup.from_invariants(inv)
