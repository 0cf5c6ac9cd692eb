"""Small resolutions of cyclic monoids, the explicit contraction
against the bar resolution, and closed-form cohomology groups.

For the cyclic monoid C of index m and period q the small resolution R
has one generator v_k in degree 2k (over p(km)) and one w_k in degree
2k+1 (over p(km+1)), with dv_{k+1} = (m+q)(m+q-1)_* w_k - m(m-1)_* w_k
and dw_k = 0; every term carrying the coefficient m is read as zero
when m = 0.  For the infinite cyclic monoid only v_0 and w_0 survive
and the differential vanishes.

The chain maps f: B(ZC) -> R and g: R -> B(ZC) and the homotopy Phi
are the explicit recursive ones; verify_contraction checks every
contraction identity on all basis cells up to a degree bound.
"""

from math import comb

from .bar import (BarWord, FreeBasedDGA, bar, bar_word_diff, bar_word_shuffle,
                  chain_add_term)
from .cohomology import CochainComplex
from .monoid import (INFINITE_CYCLIC, MonoidError, cyclic_p, cyclic_s,
                     make_cyclic)
from .zlinalg import AbGroupInvariants, IntMatrix, gcd, subquotient_invariants


def small_resolution(m, q, degmax):
    """The small free resolution of C_{m,q} as a free-based DGA."""
    if m < 0 or q < 1 or m + q < 2:
        raise MonoidError("invalid cyclic parameters (%r, %r)" % (m, q))
    C = make_cyclic(m, q)
    basis = {}
    pi = {}
    for k in range(0, degmax // 2 + 1):
        if 2 * k <= degmax:
            basis[2 * k] = (("v", k),)
            pi[("v", k)] = cyclic_p(m, q, k * m)
        if 2 * k + 1 <= degmax:
            basis[2 * k + 1] = (("w", k),)
            pi[("w", k)] = cyclic_p(m, q, k * m + 1)
    diff = {}
    for k in range(0, (degmax - 2) // 2 + 1):
        if 2 * (k + 1) > degmax:
            continue
        ch = {}
        chain_add_term(ch, (cyclic_p(m, q, m + q - 1), ("w", k)), m + q)
        if m >= 1:
            chain_add_term(ch, (m - 1, ("w", k)), -m)
        diff[("v", k + 1)] = ch

    def prod(a, b):
        (ta, ka), (tb, kb) = a, b
        if ta == "w" and tb == "w":
            return {}
        k = ka + kb
        kind = "w" if "w" in (ta, tb) else "v"
        gen = (kind, k)
        if gen not in pi:
            raise ValueError("product %r leaves the stored degree range" % (gen,))
        return {(C.identity, gen): comb(ka + kb, ka)}

    return FreeBasedDGA(
        monoid=C, degmax=degmax, basis=basis, pi=pi, diff=diff,
        product_fn=prod, unit=("v", 0), eps_tilde={("v", 0): 1},
    )


def small_resolution_inf(degmax):
    """The two-generator resolution of the infinite cyclic monoid."""
    C = INFINITE_CYCLIC
    basis = {0: (("v", 0),)}
    pi = {("v", 0): 0}
    if degmax >= 1:
        basis[1] = (("w", 0),)
        pi[("w", 0)] = 1

    def prod(a, b):
        if a[0] == "w" and b[0] == "w":
            return {}
        gen = ("w", 0) if "w" in (a[0], b[0]) else ("v", 0)
        return {(0, gen): 1}

    return FreeBasedDGA(
        monoid=C, degmax=degmax, basis=basis, pi=pi, diff={},
        product_fn=prod, unit=("v", 0), eps_tilde={("v", 0): 1},
    )


def bullet(C, a, b):
    """The auxiliary pointwise product on chains of the small
    resolution: v_k . v_l = v_{k+l}, v_k . w_l = w_{k+l}, w . w = 0.
    It deliberately ignores the binomial coefficients and does not
    respect the differential."""
    out = {}
    for (u, (ta, ka)), ca in a.items():
        for (v, (tb, kb)), cb in b.items():
            if ta == "w" and tb == "w":
                continue
            kind = "w" if "w" in (ta, tb) else "v"
            chain_add_term(out, (C.op(u, v), (kind, ka + kb)), ca * cb)
    return out


def _word(letters):
    return BarWord(tuple(letters), (1,) * max(0, len(letters) - 1), 1)


class CyclicContraction:
    """The maps f, g, Phi between B(ZC) and the small resolution for a
    finite or infinite cyclic monoid, with g memoized on generators."""

    def __init__(self, m=None, q=None, infinite=False):
        self.infinite = infinite
        if infinite:
            self.M = INFINITE_CYCLIC
            self.m = self.q = None
        else:
            self.M = make_cyclic(m, q)
            self.m = m
            self.q = q
        self._g_cache = {}

    # -- f ------------------------------------------------------------------

    def f_word(self, letters):
        """f of the bar cell with the given letters, as a chain over the
        resolution generators."""
        M = self.M
        letters = tuple(letters)
        if any(x == M.identity for x in letters):
            return {}
        n = len(letters)
        if n == 0:
            return {(M.identity, ("v", 0)): 1}
        if n == 1:
            x = letters[0]
            return {(x - 1, ("w", 0)): x}
        if n == 2:
            if self.infinite:
                return {}
            m, q = self.m, self.q
            x, y = letters
            s = cyclic_s(m, q, x, y)
            if s == 0:
                return {}
            base = M.op(x, y) - m
            out = {}
            for i in range(s):
                chain_add_term(out, (M.op(base, i * q), ("v", 1)), 1)
            return out
        if self.infinite:
            return {}
        head = self.f_word(letters[:2])
        tail = self.f_word(letters[2:])
        return bullet(self.M, head, tail)

    def f_chain(self, chain):
        M = self.M
        out = {}
        for (u, w), c in chain.items():
            for (v, gen), cc in self.f_word(w.letters).items():
                chain_add_term(out, (M.op(u, v), gen), c * cc)
        return out

    # -- g ------------------------------------------------------------------

    def g_gen(self, gen):
        """g of a resolution generator, as a chain of bar cells."""
        if gen in self._g_cache:
            return self._g_cache[gen]
        M = self.M
        kind, k = gen
        if gen == ("v", 0):
            out = {(M.identity, _word(())): 1}
        elif kind == "w":
            out = {}
            for (u, w), c in self.g_gen(("v", k)).items():
                chain_add_term(out, (u, _word(w.letters + (1,))), c)
        else:
            assert not self.infinite, "the infinite resolution stops at w_0"
            m, q = self.m, self.q
            out = {}
            gw = self.g_gen(("w", k - 1))
            for t in range(m + q):
                if t == 0:
                    continue  # the appended unit letter kills the cell
                u1 = m + q - t - 1
                for (u, w), c in gw.items():
                    chain_add_term(out, (M.op(u1, u), _word(w.letters + (t,))), c)
            for t in range(m):
                if t == 0:
                    continue
                u1 = m - t - 1
                for (u, w), c in gw.items():
                    chain_add_term(out, (M.op(u1, u), _word(w.letters + (t,))), -c)
        self._g_cache[gen] = out
        return out

    def g_chain(self, chain):
        M = self.M
        out = {}
        for (u, gen), c in chain.items():
            for (v, w), cc in self.g_gen(gen).items():
                chain_add_term(out, (M.op(u, v), w), c * cc)
        return out

    def gf_word(self, letters):
        return self.g_chain(self.f_word(letters))

    # -- Phi ----------------------------------------------------------------

    def phi_word(self, letters):
        """The contracting homotopy on one bar cell."""
        M = self.M
        letters = tuple(letters)
        if any(x == M.identity for x in letters):
            return {}
        n = len(letters)
        if n == 0:
            return {}
        if n == 1:
            x = letters[0]
            out = {}
            for t in range(1, x):  # t = 0 gives a unit letter
                chain_add_term(out, (x - t - 1, _word((1, t))), 1)
            return out
        out = {}
        for (u, w), c in self.phi_word(letters[:1]).items():
            chain_add_term(out, (u, _word(w.letters + letters[1:])), c)
        rest = self.phi_word(letters[2:])
        if rest:
            for (u, w), c in self.gf_word(letters[:2]).items():
                for (v, w2), cc in rest.items():
                    chain_add_term(out, (M.op(u, v), _word(w.letters + w2.letters)),
                                   c * cc)
        return out

    def phi_chain(self, chain):
        M = self.M
        out = {}
        for (u, w), c in chain.items():
            for (v, w2), cc in self.phi_word(w.letters).items():
                chain_add_term(out, (M.op(u, v), w2), c * cc)
        return out


def f_map(m, q, chain):
    """f applied to a chain of bar cells of C_{m,q}."""
    return CyclicContraction(m, q).f_chain(chain)


def g_map(m, q, gen):
    """g applied to one resolution generator of C_{m,q}."""
    return CyclicContraction(m, q).g_gen(gen)


def phi_homotopy(m, q, letters):
    """The contracting homotopy on one bar cell of C_{m,q}."""
    return CyclicContraction(m, q).phi_word(letters)


def gf_closed_form(m, q, x, y):
    """Fully expanded closed formula for g(f[x|y]) when s(x, y) >= 1,
    with no retraction left in any translate; an oracle for the
    compositional route."""
    M = make_cyclic(m, q)
    s = cyclic_s(m, q, x, y)
    assert s >= 1
    r = (x + y - m) % q
    assert x + y == m + s * q + r
    out = {}

    def add(u, a, b, c=1):
        if a == 0 or b == 0:
            return
        chain_add_term(out, (u, _word((a, b))), c)

    for t in range(x + y - m - q, m + q):
        add(x + y - t - 1, 1, t)
    for t in range(r):
        add(m + r - t - 1, 1, t)
    for t in range(m):
        add(m + r - t - 1, 1, t, -1)
    for i in range(1, s):
        for t in range((i - 1) * q + r, i * q + r):
            add(m + i * q + r - t - 1, 1, t)
    for i in range(1, s):
        for t in range(m, m + q):
            add(m + i * q + r - t - 1, 1, t)
    return out


# -- contraction verification -------------------------------------------------

class ContractionReport:
    """Per-identity pass/fail with witnesses."""

    __slots__ = ("params", "results")

    def __init__(self, params):
        self.params = params
        self.results = {}

    def record(self, name, witnesses):
        self.results[name] = (not witnesses, witnesses)

    def all_pass(self):
        return all(ok for ok, _ in self.results.values())

    def failures(self):
        return {name: wit for name, (ok, wit) in self.results.items() if not ok}

    def to_json(self):
        return {name: {"pass": ok, "witnesses": [repr(w) for w in wit[:3]]}
                for name, (ok, wit) in sorted(self.results.items())}

    def __repr__(self):
        return "ContractionReport(%s, %s)" % (
            self.params, "PASS" if self.all_pass() else sorted(self.failures()))


def _bar_diff_chain(M, chain):
    out = {}
    for (u, w), c in chain.items():
        for (v, w2), cc in bar_word_diff(M, w).items():
            chain_add_term(out, (M.op(u, v), w2), c * cc)
    return out


def _bar_shuffle_chains(M, a, b):
    out = {}
    for (u, w1), c1 in a.items():
        for (v, w2), c2 in b.items():
            for (t, w3), c3 in bar_word_shuffle(M, w1, w2).items():
                chain_add_term(out, (M.op(M.op(u, v), t), w3), c1 * c2 * c3)
    return out


def _resolution_gens(R, degmax):
    return [g for d in sorted(R.basis) if d <= degmax for g in R.basis[d]]


def _verify(con, R, words_by_degree, degmax, report):
    M = con.M
    e = M.identity
    gens = _resolution_gens(R, degmax)
    all_words = [w for d in sorted(words_by_degree) for w in words_by_degree[d]]

    wit = []
    for gen in gens:
        if con.f_chain(con.g_gen(gen)) != {(e, gen): 1}:
            wit.append(gen)
    report.record("f.g = id", wit)

    wit = []
    for w in all_words:
        lhs = con.f_chain(bar_word_diff(M, w))
        rhs = R.diff_chain(con.f_word(w.letters))
        if lhs != rhs:
            wit.append(w)
    report.record("f is a chain map", wit)

    wit = []
    for gen in gens:
        lhs = con.g_chain(R.differential(gen))
        rhs = _bar_diff_chain(M, con.g_gen(gen))
        if lhs != rhs:
            wit.append(gen)
    report.record("g is a chain map", wit)

    wit = []
    if con.f_word(()) != {(e, ("v", 0)): 1}:
        wit.append("f[] != v0")
    if con.g_gen(("v", 0)) != {(e, _word(())): 1}:
        wit.append("g v0 != []")
    report.record("units", wit)

    wit = []
    for a in all_words:
        for b in all_words:
            if a.degree + b.degree > degmax:
                continue
            lhs = con.f_chain(bar_word_shuffle(M, a, b))
            rhs = R.product(con.f_word(a.letters), con.f_word(b.letters))
            if lhs != rhs:
                wit.append((a, b))
    report.record("f is multiplicative", wit)

    wit = []
    for a in gens:
        for b in gens:
            if R.degree_of[a] + R.degree_of[b] > degmax:
                continue
            lhs = con.g_chain(R.product_fn(a, b))
            rhs = _bar_shuffle_chains(M, con.g_gen(a), con.g_gen(b))
            if lhs != rhs:
                wit.append((a, b))
    report.record("g is multiplicative", wit)

    wit = []
    for w in all_words:
        lhs = chain_sum_pair(
            _bar_diff_chain(M, con.phi_word(w.letters)),
            con.phi_chain(bar_word_diff(M, w)))
        rhs = dict(con.gf_word(w.letters))
        chain_add_term(rhs, (e, w), -1)
        if lhs != rhs:
            wit.append(w)
    report.record("d.Phi + Phi.d = g.f - id", wit)

    wit = []
    for gen in gens:
        if con.phi_chain(con.g_gen(gen)) != {}:
            wit.append(gen)
    report.record("Phi.g = 0", wit)

    wit = []
    for w in all_words:
        if con.f_chain(con.phi_word(w.letters)) != {}:
            wit.append(w)
    report.record("f.Phi = 0", wit)

    wit = []
    for w in all_words:
        if con.phi_chain(con.phi_word(w.letters)) != {}:
            wit.append(w)
    report.record("Phi.Phi = 0", wit)
    return report


def chain_sum_pair(a, b):
    out = dict(a)
    for k, c in b.items():
        chain_add_term(out, k, c)
    return out


def _letter_words(letters, degmax):
    by_degree = {}
    pool = [()]
    for n in range(1, degmax + 1):
        pool = [w + (x,) for w in pool for x in letters]
        by_degree[n] = [_word(w) for w in pool]
    return by_degree


def verify_contraction(m, q, degmax):
    """Check every contraction identity for C_{m,q} on all bar cells up
    to the given degree.  Failures land in the report, not exceptions."""
    con = CyclicContraction(m, q)
    R = small_resolution(m, q, degmax + 1)
    words = _letter_words([x for x in range(m + q) if x != 0], degmax)
    report = ContractionReport({"index": m, "period": q, "max_degree": degmax})
    return _verify(con, R, words, degmax, report)


def verify_contraction_inf(degmax, entry_bound):
    """Same for the infinite cyclic monoid, with cell entries bounded."""
    con = CyclicContraction(infinite=True)
    R = small_resolution_inf(degmax + 1)
    words = _letter_words(list(range(1, entry_bound + 1)), degmax)
    report = ContractionReport({"index": "inf", "max_degree": degmax,
                                "entry_bound": entry_bound})
    return _verify(con, R, words, degmax, report)


# -- cohomology of cyclic monoids ---------------------------------------------

def _two_term_map(m, q, module, src, tgt):
    """(m+q)(m+q-1)_* - m(m-1)_* as a matrix A(src) -> A(tgt); the
    m-term is dropped when m = 0 since m-1 is not an element."""
    big = module.action(src, cyclic_p(m, q, m + q - 1)).scaled(m + q)
    if m == 0:
        return big
    return chain_matrix_sub(big, module.action(src, m - 1).scaled(m))


def chain_matrix_sub(a, b):
    assert a.rows == b.rows and a.cols == b.cols
    return IntMatrix(a.rows, a.cols,
                     [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a.data, b.data)])


def leech_groups_cyclic(m, q, k, module):
    """(H^{2k+1}, H^{2k+2}) of the level-1 (Leech) cohomology of
    C_{m,q}, from the two-term map A(p(km+1)) -> A(p(km+m))."""
    src = cyclic_p(m, q, k * m + 1)
    tgt = cyclic_p(m, q, k * m + m)
    D = _two_term_map(m, q, module, src, tgt)
    gsrc = module.group(src)
    gtgt = module.group(tgt)
    from .zlinalg import preimage_lattice
    kernel = preimage_lattice(D, gtgt.relations)
    odd = subquotient_invariants(kernel, gsrc.relations)
    out_rel = D.hstack(gtgt.relations)
    even = subquotient_invariants(IntMatrix.identity(gtgt.ngens), out_rel)
    return odd, even


def _cyclic_bar_complex(m, q, iterations, degmax, module):
    if m is None:
        R = small_resolution_inf(degmax)
    else:
        R = small_resolution(m, q, degmax)
    D = R
    for _ in range(iterations):
        D = bar(D, degmax)
    return CochainComplex(D, module, degmax)


def level2_groups_cyclic(m, q, module):
    """(H^2, H^3, H^4) of C_{m,q} at level 2 via the small complex
    Hom(B(R), A)."""
    cx = _cyclic_bar_complex(m, q, 1, 5, module)
    return cx.cohomology(2), cx.cohomology(3), cx.cohomology(4)


def level3_top(m, q, module):
    """H^5(C, 3; A) via the small complex Hom(B^2(R), A)."""
    cx = _cyclic_bar_complex(m, q, 2, 6, module)
    return cx.cohomology(5)


def closed_form_top(q, group):
    """Hom(Z/(2q, q^2), A) for a constant coefficient group: the
    (q gcd(2, q))-torsion subgroup in invariant form."""
    d = q * gcd(2, q)
    inv = group.invariants()
    torsion = [gcd(d, t) for t in inv.torsion]
    return AbGroupInvariants.from_diagonal(torsion)


def torsion_subgroup_invariants(group, d):
    """{a : d a = 0} of a constant coefficient group, in invariant form."""
    inv = group.invariants()
    return AbGroupInvariants.from_diagonal([gcd(d, t) for t in inv.torsion])


def infinite_cyclic_groups(r, n, samples):
    """Closed-form H^n(C_inf, r; A) from coefficient groups sampled at
    the finitely many required points (a dict element -> group).

    r = 1: A(0), A(1), then zero.  r = 2: A(k) in degree 2k, zero in
    odd degrees.  r = 3 (n <= 5): A(0), A(1) in degree 3, zero in
    degree 4, the 2-torsion of A(2) in degree 5.
    """
    def group_at(x):
        try:
            g = samples[x]
        except KeyError:
            raise MonoidError("missing coefficient sample at point %d" % x)
        return g.invariants()

    if n == 0:
        return group_at(0)
    if r == 1:
        if n == 1:
            return group_at(1)
        return AbGroupInvariants(0)
    if r == 2:
        if n % 2 == 0:
            return group_at(n // 2)
        return AbGroupInvariants(0)
    if r == 3:
        if 0 < n < 3 or n == 4:
            return AbGroupInvariants(0)
        if n == 3:
            return group_at(1)
        if n == 5:
            g = samples.get(2)
            if g is None:
                raise MonoidError("missing coefficient sample at point 2")
            return torsion_subgroup_invariants(g, 2)
        raise ValueError("level-3 closed forms stop at degree 5")
    raise ValueError("closed forms available for levels 1, 2, 3 only")
