"""Symmetric monoidal abelian groupoids, represented as totally
disconnected, strictly unitary data: objects are the monoid elements,
the vertex group at x is A(x), the tensor acts on objects through the
monoid and on morphisms by a_x (x) a_y = y_* a_x + x_* a_y, and the
associativity and symmetry constraints are tables g(x,y,z), mu(x,y)
normalized to vanish on the unit.

A crossed product of a 5-cocycle is coherent; conversely coherence of
the tables is exactly the 5-cocycle condition, which is how the
classification by the top truncated cohomology group is exercised.
"""

from itertools import product

from .hmod import HModule, IntMatrix, validate_module
from .monoid import validate_table


class GroupoidError(ValueError):
    pass


class SMAGroupoid:
    """Totally disconnected symmetric monoidal abelian groupoid."""

    __slots__ = ("monoid", "module", "g_table", "mu_table")

    def __init__(self, monoid, module, g_table, mu_table):
        self.monoid = monoid
        self.module = module
        self.g_table = dict(g_table)
        self.mu_table = dict(mu_table)

    def assoc(self, x, y, z):
        return self.g_table.get((x, y, z)) or self._zero(self.monoid.op(self.monoid.op(x, y), z))

    def symm(self, x, y):
        return self.mu_table.get((x, y)) or self._zero(self.monoid.op(x, y))

    def _zero(self, obj):
        return tuple(self.module.group(obj).zero())

    def tensor_obj(self, x, y):
        return self.monoid.op(x, y)

    def tensor_mor(self, x, a, y, b):
        """(a: x -> x) (x) (b: y -> y) = y_* a + x_* b at xy."""
        left = self.module.translate(x, y, list(a))
        right = self.module.translate(y, x, list(b))
        return tuple(l + r for l, r in zip(left, right))


def _normalized_table(M, module, table, arity, name):
    e = M.identity
    out = {}
    for key, val in table.items():
        if len(key) != arity:
            raise GroupoidError("%s table key %r has arity %d" % (name, key, arity))
        pi = e
        for x in key:
            pi = M.op(pi, x)
        grp = module.group(pi)
        val = tuple(val)
        if len(val) != grp.ngens:
            raise GroupoidError("%s value at %r has %d coordinates, group needs %d"
                                % (name, key, len(val), grp.ngens))
        if any(x == e for x in key):
            if not grp.is_zero_element(list(val)):
                raise GroupoidError("%s value at %r must vanish (unit argument)"
                                    % (name, key))
            continue
        out[key] = val
    return out


def crossed_product(M, module, g_table, mu_table):
    """The groupoid with associativity g and symmetry mu; building it
    does not require the cocycle condition."""
    g_table = _normalized_table(M, module, g_table, 3, "g")
    mu_table = _normalized_table(M, module, mu_table, 2, "mu")
    return SMAGroupoid(M, module, g_table, mu_table)


class CoherenceReport:
    __slots__ = ("failures",)

    def __init__(self):
        self.failures = []

    def record(self, condition, witness):
        self.failures.append((condition, witness))

    def ok(self):
        return not self.failures

    def __repr__(self):
        return "CoherenceReport(%s)" % ("PASS" if self.ok() else self.failures[:4])


def check_coherence(G):
    """Exhaustively evaluate the pentagon-type identity over M^4, the
    unit identity, the hexagon-type identity and the symmetry involution
    over M^3 and M^2, then the derived unit identities."""
    M = G.monoid
    mod = G.module
    e = M.identity
    report = CoherenceReport()

    def eq(obj, lhs, rhs):
        grp = mod.group(obj)
        return grp.is_zero_element([a - b for a, b in zip(lhs, rhs)])

    def tr(x, y, vec):
        return mod.translate(x, y, list(vec))

    def add(*vecs):
        return [sum(col) for col in zip(*vecs)]

    for x in M.elements():
        for y in M.elements():
            for z in M.elements():
                for t in M.elements():
                    obj = M.op(M.op(x, y), M.op(z, t))
                    lhs = add(G.assoc(x, y, M.op(z, t)), G.assoc(M.op(x, y), z, t))
                    rhs = add(tr(M.op(y, M.op(z, t)), x, G.assoc(y, z, t)),
                              G.assoc(x, M.op(y, z), t),
                              tr(M.op(x, M.op(y, z)), t, G.assoc(x, y, z)))
                    if not eq(obj, lhs, rhs):
                        report.record("5.1", (x, y, z, t))

    for x in M.elements():
        for y in M.elements():
            if not eq(M.op(x, y), G.assoc(x, e, y), G._zero(M.op(x, y))):
                report.record("5.2", (x, y))

    for x in M.elements():
        for y in M.elements():
            for z in M.elements():
                obj = M.op(M.op(x, y), z)
                lhs = add(tr(M.op(x, z), y, G.symm(x, z)),
                          G.assoc(y, x, z),
                          tr(M.op(x, y), z, G.symm(x, y)))
                rhs = add(G.assoc(y, z, x),
                          G.symm(x, M.op(y, z)),
                          G.assoc(x, y, z))
                if not eq(obj, lhs, rhs):
                    report.record("5.3", (x, y, z))

    for x in M.elements():
        for y in M.elements():
            obj = M.op(x, y)
            if not eq(obj, add(G.symm(y, x), G.symm(x, y)), G._zero(obj)):
                report.record("5.4", (x, y))

    # derived identities: in the strictly unitary presentation they are
    # further normalization statements and must follow
    for x in M.elements():
        for y in M.elements():
            if not eq(M.op(x, y), G.assoc(e, x, y), G._zero(M.op(x, y))):
                report.record("derived-left-unit", (x, y))
            if not eq(M.op(x, y), G.assoc(x, y, e), G._zero(M.op(x, y))):
                report.record("derived-right-unit", (x, y))
        if not eq(x, G.symm(x, e), G._zero(x)):
            report.record("derived-symm-unit", (x,))
        if not eq(x, G.symm(e, x), G._zero(x)):
            report.record("derived-unit-symm", (x,))
    return report


def cocycle_check(M, module, g_table, mu_table):
    """True iff the pair is a 5-cocycle of the level-3 truncated
    complex: the (h, gamma, delta, xi) components of the coboundary
    all vanish."""
    G = crossed_product(M, module, g_table, mu_table)
    mod = module
    e = M.identity

    def g(x, y, z):
        return G.assoc(x, y, z)

    def mu(x, y):
        return G.symm(x, y)

    def tr(x, y, vec):
        return mod.translate(x, y, list(vec))

    def zero(obj, combo):
        grp = mod.group(obj)
        acc = [0] * grp.ngens
        for sign, vec in combo:
            for i, v in enumerate(vec):
                acc[i] += sign * v
        return grp.is_zero_element(acc)

    els = list(M.elements())
    for x in els:
        for y in els:
            for z in els:
                for t in els:
                    obj = M.op(M.op(x, y), M.op(z, t))
                    combo = [(1, tr(M.op(y, M.op(z, t)), x, g(y, z, t))),
                             (-1, g(M.op(x, y), z, t)),
                             (1, g(x, M.op(y, z), t)),
                             (-1, g(x, y, M.op(z, t))),
                             (1, tr(M.op(x, M.op(y, z)), t, g(x, y, z)))]
                    if not zero(obj, combo):
                        return False
    for x in els:
        for y in els:
            for z in els:
                obj = M.op(M.op(x, y), z)
                gamma = [(1, tr(M.op(x, z), y, mu(x, z))),
                         (-1, mu(x, M.op(y, z))),
                         (1, tr(M.op(x, y), z, mu(x, y))),
                         (-1, g(x, y, z)),
                         (1, g(y, x, z)),
                         (-1, g(y, z, x))]
                if not zero(obj, gamma):
                    return False
                delta = [(1, tr(M.op(y, z), x, mu(y, z))),
                         (-1, mu(M.op(x, y), z)),
                         (1, tr(M.op(x, z), y, mu(x, z))),
                         (1, g(x, y, z)),
                         (-1, g(x, z, y)),
                         (1, g(z, x, y))]
                if not zero(obj, delta):
                    return False
    for x in els:
        for y in els:
            obj = M.op(x, y)
            if not zero(obj, [(-1, mu(x, y)), (-1, mu(y, x))]):
                return False
    return True


def extract_triple(G):
    """Read off (M, A, g, mu) from a strictly unitary totally
    disconnected groupoid: the monoid from the object tensor, the
    module action from tensoring with identity morphisms, and the
    constraint tables; the extracted action is validated and the
    tables must form a 5-cocycle."""
    M = G.monoid
    n = M.size
    table = [[G.tensor_obj(x, y) for y in range(n)] for x in range(n)]
    monoid = validate_table(n, M.identity, table)
    groups = [G.module.group(x) for x in range(n)]
    actions = {}
    for x in range(n):
        for y in range(n):
            src = groups[x]
            cols = []
            for i in range(src.ngens):
                basis_vec = [0] * src.ngens
                basis_vec[i] = 1
                cols.append(G.tensor_mor(x, basis_vec, y, groups[y].zero()))
            mat = IntMatrix(groups[monoid.op(x, y)].ngens, src.ngens)
            for j, col in enumerate(cols):
                for i, v in enumerate(col):
                    mat.data[i][j] = v
            actions[(x, y)] = mat
    module = HModule(monoid, groups, actions)
    bad = validate_module(module)
    if bad:
        raise GroupoidError("extracted action is not a module: %r" % (bad[:3],))
    if not cocycle_check(monoid, module, G.g_table, G.mu_table):
        raise GroupoidError("extracted tables are not a 5-cocycle "
                            "(the input groupoid is not coherent)")
    return monoid, module, dict(G.g_table), dict(G.mu_table)


# -- monoidal functors --------------------------------------------------------

class MonoidalFunctorData:
    """A candidate symmetric monoidal isomorphism: a monoid isomorphism
    i, a natural family of group isomorphisms psi_x: A(x) -> A'(ix),
    and the binary constraint table f(x,y) in A'(i(xy)); the unit
    constraint is the zero morphism."""

    __slots__ = ("i", "psi", "f")

    def __init__(self, i, psi, f):
        self.i = tuple(i)
        self.psi = dict(psi)
        self.f = dict(f)


def _is_monoid_iso(M, Mp, i):
    if sorted(i) != list(range(Mp.size)):
        return False
    if i[M.identity] != Mp.identity:
        return False
    for x in M.elements():
        for y in M.elements():
            if i[M.op(x, y)] != Mp.op(i[x], i[y]):
                return False
    return True


def _matrices_equal_mod(grp, a, b):
    for j in range(a.cols):
        if not grp.elements_equal(a.column(j), b.column(j)):
            return False
    return True


def _is_group_iso(src, tgt, mat):
    """mat: src -> tgt is an isomorphism of the presented groups: it
    maps relations into relations and admits a two-sided inverse."""
    from .hmod import _matrix_maps_relations
    if not _matrix_maps_relations(mat, src, tgt):
        return False
    # surjectivity: every target generator is reachable modulo relations
    from .zlinalg import lattice_basis, lattice_solve
    H = lattice_basis(mat.hstack(tgt.relations))
    for i in range(tgt.ngens):
        bvec = [0] * tgt.ngens
        bvec[i] = 1
        if lattice_solve(H, bvec) is None:
            return False
    # injectivity: the kernel lattice sits inside the source relations
    from .zlinalg import preimage_lattice, lattice_contains
    ker = preimage_lattice(mat, tgt.relations)
    src_rel = lattice_basis(src.relations)
    for j in range(ker.cols):
        col = ker.column(j)
        if any(col):
            if not (src_rel.cols and lattice_contains(src_rel, col)):
                return False
    return True


def verify_monoidal_iso(src, tgt, data):
    """Check that (i, psi, f) is a symmetric monoidal isomorphism from
    the crossed product src to tgt: i a monoid isomorphism, psi a
    natural family of group isomorphisms, the tables matching through
    the two cocycle-transport identities.  Returns (ok, witness)."""
    M, Mp = src.monoid, tgt.monoid
    A, Ap = src.module, tgt.module
    i = data.i
    if not _is_monoid_iso(M, Mp, i):
        return False, ("monoid-iso",)
    e = M.identity
    for x in M.elements():
        mat = data.psi[x]
        if not _is_group_iso(A.group(x), Ap.group(i[x]), mat):
            return False, ("psi-iso", x)
    # naturality (ea3): psi_{xy} . x_* = (ix)_* . psi_y
    for x in M.elements():
        for y in M.elements():
            xy = M.op(x, y)
            lhs = data.psi[xy].mul(A.action(y, x))
            rhs = Ap.action(i[y], i[x]).mul(data.psi[y])
            if not _matrices_equal_mod(Ap.group(i[xy]), lhs, rhs):
                return False, ("psi-naturality", (x, y))

    def f_val(x, y):
        val = data.f.get((x, y))
        if val is None:
            return Ap.group(i[M.op(x, y)]).zero()
        return list(val)

    for x in M.elements():
        if any(f_val(x, e)) or any(f_val(e, x)):
            fx = Ap.group(i[x])
            if not (fx.is_zero_element(f_val(x, e)) and fx.is_zero_element(f_val(e, x))):
                return False, ("f-normalization", x)

    def tr(x, y, vec):
        return Ap.translate(x, y, list(vec))

    for x in M.elements():
        for y in M.elements():
            for z in M.elements():
                obj = i[M.op(M.op(x, y), z)]
                grp = Ap.group(obj)
                lhs = data.psi[M.op(M.op(x, y), z)].mul_vector(src.assoc(x, y, z))
                rhs = [0] * grp.ngens
                terms = [(1, tgt.assoc(i[x], i[y], i[z])),
                         (1, tr(i[M.op(y, z)], i[x], f_val(y, z))),
                         (-1, f_val(M.op(x, y), z)),
                         (1, f_val(x, M.op(y, z))),
                         (-1, tr(i[M.op(x, y)], i[z], f_val(x, y)))]
                for sign, vec in terms:
                    for k, v in enumerate(vec):
                        rhs[k] += sign * v
                if not grp.is_zero_element([a - b for a, b in zip(lhs, rhs)]):
                    return False, ("transport-assoc", (x, y, z))
    for x in M.elements():
        for y in M.elements():
            obj = i[M.op(x, y)]
            grp = Ap.group(obj)
            lhs = data.psi[M.op(x, y)].mul_vector(src.symm(x, y))
            rhs = [0] * grp.ngens
            for sign, vec in [(1, tgt.symm(i[x], i[y])),
                              (-1, f_val(x, y)),
                              (1, f_val(y, x))]:
                for k, v in enumerate(vec):
                    rhs[k] += sign * v
            if not grp.is_zero_element([a - b for a, b in zip(lhs, rhs)]):
                return False, ("transport-symm", (x, y))
    return True, None


def build_monoidal_iso(src, tgt, i, psi, f):
    """Assemble and verify candidate isomorphism data; raises on
    failure."""
    data = MonoidalFunctorData(i, psi, f)
    ok, witness = verify_monoidal_iso(src, tgt, data)
    if not ok:
        raise GroupoidError("not a symmetric monoidal isomorphism: %r" % (witness,))
    return data


# -- enumeration / classification ---------------------------------------------

def enumerate_cochain_tables(M, module, arity):
    """All normalized tables M*^arity -> A(product), as dicts."""
    nu = M.nonunit()
    keys = list(product(nu, repeat=arity))
    value_lists = []
    for key in keys:
        pi = M.identity
        for x in key:
            pi = M.op(pi, x)
        value_lists.append(module.group(pi).element_list())
    tables = [{}]
    for key, values in zip(keys, value_lists):
        new_tables = []
        for t in tables:
            for v in values:
                t2 = dict(t)
                t2[key] = tuple(v)
                new_tables.append(t2)
        tables = new_tables
    return tables


def monoid_automorphisms(M):
    """All table-preserving permutations fixing the identity; intended
    for the small-object classification search (|M| <= 4)."""
    from itertools import permutations
    out = []
    for perm in permutations(range(M.size)):
        if perm[M.identity] != M.identity:
            continue
        if all(perm[M.op(x, y)] == M.op(perm[x], perm[y])
               for x in range(M.size) for y in range(M.size)):
            out.append(perm)
    return out


def iso_classes(M, module, search_automorphisms=False):
    """Partition the 5-cocycles over (M, A) into isomorphism classes.

    By default only isomorphisms with identity monoid and coefficient
    components are searched; with search_automorphisms the monoid
    component ranges over Aut(M) (kept to |M| <= 4, and to constant
    coefficients so the identity family is natural for every i).
    """
    if search_automorphisms:
        if M.size > 4:
            raise GroupoidError("automorphism search is capped at |M| <= 4")
        if not module.constant:
            raise GroupoidError("automorphism search needs constant coefficients")
        isos = monoid_automorphisms(M)
    else:
        isos = [tuple(range(M.size))]
    gs = enumerate_cochain_tables(M, module, 3)
    mus = enumerate_cochain_tables(M, module, 2)
    cocycles = [(g, mu) for g in gs for mu in mus
                if cocycle_check(M, module, g, mu)]
    psi = {x: IntMatrix.identity(module.group(x).ngens) for x in M.elements()}
    fs = enumerate_cochain_tables(M, module, 2)
    classes = []
    for g, mu in cocycles:
        src = crossed_product(M, module, g, mu)
        placed = False
        for cls in classes:
            rep = cls[0]
            tgt = crossed_product(M, module, rep[0], rep[1])
            for i in isos:
                for f in fs:
                    ok, _ = verify_monoidal_iso(
                        src, tgt, MonoidalFunctorData(i, psi, f))
                    if ok:
                        cls.append((g, mu))
                        placed = True
                        break
                if placed:
                    break
            if placed:
                break
        if not placed:
            classes.append([(g, mu)])
    return cocycles, classes


def identity_iso_classes(M, module):
    """Classes of 5-cocycles under isomorphisms with identity monoid
    and coefficient components; the class count realizes the order of
    the top truncated cohomology group.  Returns (cocycles, classes)."""
    return iso_classes(M, module, search_automorphisms=False)
