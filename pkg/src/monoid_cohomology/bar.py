"""Bar constructions on free-based commutative differential graded
augmented algebras over a commutative monoid.

Chains are dicts mapping (translate, generator) -> integer coefficient,
always pruned of zero entries; a generator g with projection pi(g)
stands for the element g of the free module at pi(g), and (u, g) for
its translate u_* g.

Level-r cells of the iterated bar construction on the monoid algebra
are stored flat: letters x1..xm from M \\ {e} and separators k1..k_{m-1}
with 1 <= ki <= r.  The word has degree r + sum(ki) (the empty word has
degree 0) and projection x1...xm.  Splitting at the separators equal to
r recovers the top tensor factors, each a level-(r-1) word; a word with
no top separator is the suspension of its single factor, which is why
the flat form is stable under suspension.
"""

from itertools import combinations, product

from .monoid import FiniteCommutativeMonoid


class BarWord:
    __slots__ = ("letters", "seps", "level")

    def __init__(self, letters, seps, level):
        letters = tuple(letters)
        seps = tuple(seps)
        assert len(seps) == max(0, len(letters) - 1)
        assert all(1 <= k <= level for k in seps)
        self.letters = letters
        self.seps = seps
        self.level = level

    @property
    def degree(self):
        if not self.letters:
            return 0
        return self.level + sum(self.seps)

    def pi(self, M):
        x = M.identity
        for y in self.letters:
            x = M.op(x, y)
        return x

    def is_empty(self):
        return not self.letters

    def suspend(self, level):
        """The same word seen at a higher level (iterated suspension)."""
        assert level >= self.level or not self.letters
        return BarWord(self.letters, self.seps, level)

    def sort_key(self):
        # more letters first, then higher separators, then letters
        return (-len(self.letters), tuple(-k for k in self.seps), self.letters)

    def __eq__(self, other):
        return (isinstance(other, BarWord) and self.letters == other.letters
                and self.seps == other.seps and self.level == other.level)

    def __hash__(self):
        return hash((self.letters, self.seps, self.level))

    def __repr__(self):
        return "BarWord(%r, %r, level=%d)" % (self.letters, self.seps, self.level)


def render_word(word):
    if not word.letters:
        return "[]"
    out = [str(word.letters[0])]
    for k, x in zip(word.seps, word.letters[1:]):
        out.append(" | " if k == 1 else " |^%d " % k)
        out.append(str(x))
    return "[" + "".join(out) + "]"


def word_to_json(word, M):
    return {"letters": list(word.letters), "separators": list(word.seps),
            "level": word.level, "degree": word.degree, "pi": word.pi(M)}


# -- chain arithmetic ---------------------------------------------------------

def chain_add_term(chain, key, coeff):
    if not coeff:
        return
    new = chain.get(key, 0) + coeff
    if new:
        chain[key] = new
    else:
        del chain[key]


def chain_sum(*chains):
    out = {}
    for ch in chains:
        for key, c in ch.items():
            chain_add_term(out, key, c)
    return out


def chain_scaled(chain, c):
    if not c:
        return {}
    return {key: c * v for key, v in chain.items()}


def chain_translate(M, chain, u):
    if u == M.identity:
        return dict(chain)
    return {(M.op(u, v), g): c for (v, g), c in chain.items()}


def unit_chain(M, gen):
    return {(M.identity, gen): 1}


# -- flat bar words over the monoid algebra ----------------------------------

def split_top(word):
    """Top tensor factors of a level-r word, as level-(r-1) words."""
    r = word.level
    segs = []
    cur_letters = [word.letters[0]]
    cur_seps = []
    for k, x in zip(word.seps, word.letters[1:]):
        if k == r:
            segs.append(BarWord(cur_letters, cur_seps, r - 1))
            cur_letters = [x]
            cur_seps = []
        else:
            cur_seps.append(k)
            cur_letters.append(x)
    segs.append(BarWord(cur_letters, cur_seps, r - 1))
    return segs


def join_top(segments, r):
    """Inverse of split_top: the level-r word with the given top factors."""
    letters = []
    seps = []
    for i, seg in enumerate(segments):
        if i:
            seps.append(r)
        letters.extend(seg.letters)
        seps.extend(seg.seps)
    if not letters:
        return BarWord((), (), r)
    return BarWord(letters, seps, r)


def _prefix_exponents(degs):
    # e_i = i + deg_1 + ... + deg_i, starting with e_0 = 0
    out = [0]
    for d in degs:
        out.append(out[-1] + 1 + d)
    return out


def bar_word_diff(M, word):
    """Differential of a level-r cell, as a chain of level-r words.

    Implements d = d_tensor + d_mult recursively through the levels;
    at the bottom the letters multiply in the monoid and the
    augmentation edge terms appear.
    """
    e = M.identity
    if word.is_empty() or word.level == 0:
        return {}
    if any(x == e for x in word.letters):
        return {}
    r = word.level
    segs = split_top(word)
    p = len(segs)
    degs = [s.degree for s in segs]
    ex = _prefix_exponents(degs)
    out = {}

    # d_tensor: differentiate each factor
    if r > 1:
        for i in range(p):
            sub = bar_word_diff(M, segs[i])
            if not sub:
                continue
            sign = -1 if ex[i] % 2 == 0 else 1  # -(-1)^{e_{i-1}}
            for (u, w), c in sub.items():
                if w.is_empty():
                    continue  # a translated unit letter kills the word
                new = join_top(segs[:i] + [w] + segs[i + 1:], r)
                chain_add_term(out, (u, new), sign * c)

    # d_mult: multiply adjacent factors
    for i in range(p - 1):
        sign = 1 if ex[i + 1] % 2 == 0 else -1  # (-1)^{e_i}
        if r == 1:
            xy = M.op(segs[i].letters[0], segs[i + 1].letters[0])
            if xy == e:
                continue
            prod = {(e, BarWord((xy,), (), 0)): 1}
        else:
            prod = bar_word_shuffle(M, segs[i], segs[i + 1])
        for (u, w), c in prod.items():
            if w.is_empty():
                continue
            new = join_top(segs[:i] + [w] + segs[i + 2:], r)
            chain_add_term(out, (u, new), sign * c)

    # augmentation edge terms: only degree-0 letters contribute, which
    # happens exactly at level 1 (epsilon-tilde is 1 on every generator
    # of the monoid algebra)
    if r == 1:
        first = join_top(segs[1:], r)
        chain_add_term(out, (segs[0].letters[0], first), 1)
        last = join_top(segs[:-1], r)
        sign = 1 if ex[p] % 2 == 0 else -1
        chain_add_term(out, (segs[p - 1].letters[0], last), sign)
    return out


def bar_word_shuffle(M, a, b):
    """Shuffle product of two cells of the same level, as a chain.

    The sign exponent sums (1 + deg a_i)(1 + deg b_j) over inverted
    pairs, where the degrees are those of the top factors one level
    down.
    """
    if a.level != b.level:
        raise ValueError("shuffle needs words of the same level: %d vs %d"
                         % (a.level, b.level))
    e = M.identity
    if any(x == e for x in a.letters) or any(x == e for x in b.letters):
        return {}
    if a.is_empty():
        return {(e, b): 1}
    if b.is_empty():
        return {(e, a): 1}
    r = a.level
    segsA = split_top(a)
    segsB = split_top(b)
    p, q = len(segsA), len(segsB)
    degsA = [s.degree for s in segsA]
    degsB = [s.degree for s in segsB]
    out = {}
    for apos in combinations(range(p + q), p):
        apos_set = set(apos)
        exponent = 0
        merged = []
        ai = bi = 0
        bpos_list = [pos for pos in range(p + q) if pos not in apos_set]
        for pos in range(p + q):
            if pos in apos_set:
                # count b factors placed before this a factor
                for j, bp in enumerate(bpos_list):
                    if bp < pos:
                        exponent += (1 + degsA[ai]) * (1 + degsB[j])
                merged.append(segsA[ai])
                ai += 1
            else:
                merged.append(segsB[bi])
                bi += 1
        word = join_top(merged, r)
        chain_add_term(out, (e, word), 1 if exponent % 2 == 0 else -1)
    return out


def explicit_low_degree_differential(M, word):
    """Hardcoded low-degree differential formulas, used purely as an
    oracle against the recursive one.  Supports the five classical
    shapes: level-1 cells, [x|^2 y], [x|^2 y|z], [x|y|^2 z], [x|^3 y].
    """
    e = M.identity

    def w(letters, seps, level):
        if any(x == e for x in letters):
            return None
        return BarWord(letters, seps, level)

    def add(out, u, maybe_word, c):
        if maybe_word is not None:
            chain_add_term(out, (u, maybe_word), c)

    out = {}
    if word.level == 1:
        xs = word.letters
        n = len(xs)
        add(out, xs[0], w(xs[1:], (1,) * max(0, n - 2), 1), 1)
        for i in range(n - 1):
            sign = -1 if i % 2 == 0 else 1  # (-1)^{i+1} with 1-based i
            merged = xs[:i] + (M.op(xs[i], xs[i + 1]),) + xs[i + 2:]
            add(out, e, w(merged, (1,) * (n - 2), 1), sign)
        sign = 1 if n % 2 == 0 else -1
        add(out, xs[n - 1], w(xs[:-1], (1,) * max(0, n - 2), 1), sign)
        return out
    if word.level == 2 and word.seps == (2,):
        x, y = word.letters
        add(out, e, w((x, y), (1,), 2), 1)
        add(out, e, w((y, x), (1,), 2), -1)
        return out
    if word.level == 2 and word.seps == (2, 1):
        x1, x2, x3 = word.letters
        add(out, x2, w((x1, x3), (2,), 2), -1)
        add(out, e, w((x1, M.op(x2, x3)), (2,), 2), 1)
        add(out, x3, w((x1, x2), (2,), 2), -1)
        add(out, e, w((x1, x2, x3), (1, 1), 2), 1)
        add(out, e, w((x2, x1, x3), (1, 1), 2), -1)
        add(out, e, w((x2, x3, x1), (1, 1), 2), 1)
        return out
    if word.level == 2 and word.seps == (1, 2):
        x1, x2, x3 = word.letters
        add(out, x1, w((x2, x3), (2,), 2), -1)
        add(out, e, w((M.op(x1, x2), x3), (2,), 2), 1)
        add(out, x2, w((x1, x3), (2,), 2), -1)
        add(out, e, w((x1, x2, x3), (1, 1), 2), -1)
        add(out, e, w((x1, x3, x2), (1, 1), 2), 1)
        add(out, e, w((x3, x1, x2), (1, 1), 2), -1)
        return out
    if word.level == 3 and word.seps == (3,):
        x1, x2 = word.letters
        add(out, e, w((x1, x2), (2,), 3), -1)
        add(out, e, w((x2, x1), (2,), 3), -1)
        return out
    raise ValueError("no closed formula for the shape of %r" % (word,))


# -- free-based DGA container -------------------------------------------------

class DGAError(ValueError):
    pass


class FreeBasedDGA:
    """A commutative DGA-algebra given by free bases in each degree.

    basis: dict degree -> tuple of generator keys (ordered).
    pi: generator -> monoid element.
    diff: generator -> chain over generators one degree down.
    product_fn: (generator, generator) -> chain (sum of the degrees).
    eps_tilde: degree-0 generator -> int augmentation coefficient.
    """

    __slots__ = ("monoid", "degmax", "basis", "pi", "degree_of", "diff",
                 "diff_fn", "product_fn", "unit", "eps_tilde")

    def __init__(self, monoid, degmax, basis, pi, diff, product_fn, unit, eps_tilde,
                 diff_fn=None):
        self.monoid = monoid
        self.degmax = degmax
        self.basis = {d: tuple(gens) for d, gens in basis.items()}
        self.pi = dict(pi)
        self.degree_of = {g: d for d, gens in self.basis.items() for g in gens}
        self.diff = dict(diff)
        self.diff_fn = diff_fn
        self.product_fn = product_fn
        self.unit = unit
        self.eps_tilde = dict(eps_tilde)

    def generators(self, degree):
        if degree > self.degmax:
            raise DGAError("degree %d above the stored bound %d" % (degree, self.degmax))
        return self.basis.get(degree, ())

    def differential(self, gen):
        if gen in self.diff:
            return self.diff[gen]
        if self.diff_fn is not None:
            return self.diff_fn(gen)
        return {}

    def diff_chain(self, chain):
        M = self.monoid
        out = {}
        for (u, g), c in chain.items():
            for (v, h), cc in self.differential(g).items():
                chain_add_term(out, (M.op(u, v), h), c * cc)
        return out

    def product(self, chain_a, chain_b):
        M = self.monoid
        out = {}
        for (u, g), ca in chain_a.items():
            for (v, h), cb in chain_b.items():
                uv = M.op(u, v)
                for (w, k), c in self.product_fn(g, h).items():
                    chain_add_term(out, (M.op(uv, w), k), ca * cb * c)
        return out

    def eps_of_chain(self, chain):
        """Augmentation coefficient of a degree-0 chain (translates do
        not change it)."""
        return sum(c * self.eps_tilde.get(g, 0) for (u, g), c in chain.items())


def zm_dga(M):
    """The monoid algebra as a trivially graded free-based DGA: one
    degree-0 generator per element, g_x . g_y = g_{xy}."""
    if not isinstance(M, FiniteCommutativeMonoid):
        raise DGAError("zm_dga needs a finite monoid")
    e = M.identity

    def prod(x, y):
        return {(e, M.op(x, y)): 1}

    return FreeBasedDGA(
        monoid=M, degmax=0,
        basis={0: tuple(range(M.size))},
        pi={x: x for x in range(M.size)},
        diff={},
        product_fn=prod,
        unit=e,
        eps_tilde={x: 1 for x in range(M.size)},
    )


def bar(D, degmax):
    """The bar construction on a free-based DGA, again free-based.

    Generators in degree n are the words of non-unit generators of D
    with (number of letters) + (letter degrees) = n; any word holding a
    translated unit letter is zero.
    """
    M = D.monoid
    e = M.identity
    if D.degree_of.get(D.unit) != 0:
        raise DGAError("the unit of the input DGA must be a degree-0 basis generator")
    reduced = []
    for d in sorted(D.basis):
        for g in D.basis[d]:
            if g != D.unit:
                reduced.append((g, d))

    words = {0: ((),)}

    def build(n):
        if n in words:
            return words[n]
        out = []
        for g, d in reduced:
            if 1 + d <= n:
                for rest in build(n - 1 - d):
                    out.append((g,) + rest)
        words[n] = tuple(out)
        return words[n]

    basis = {}
    for n in range(degmax + 1):
        ws = build(n)
        if ws:
            basis[n] = ws

    def word_pi(wrd):
        x = e
        for g in wrd:
            x = M.op(x, D.pi[g])
        return x

    pi = {w: word_pi(w) for ws in basis.values() for w in ws}

    def word_diff(wrd):
        p = len(wrd)
        if p == 0:
            return {}
        degs = [D.degree_of[g] for g in wrd]
        ex = _prefix_exponents(degs)
        out = {}
        for i in range(p):
            sub = D.differential(wrd[i])
            if not sub:
                continue
            sign = -1 if ex[i] % 2 == 0 else 1
            for (u, g2), c in sub.items():
                if g2 == D.unit:
                    continue
                chain_add_term(out, (u, wrd[:i] + (g2,) + wrd[i + 1:]), sign * c)
        for i in range(p - 1):
            sign = 1 if ex[i + 1] % 2 == 0 else -1
            for (u, g2), c in D.product_fn(wrd[i], wrd[i + 1]).items():
                if g2 == D.unit:
                    continue
                chain_add_term(out, (u, wrd[:i] + (g2,) + wrd[i + 2:]), sign * c)
        if degs[0] == 0:
            coeff = D.eps_tilde.get(wrd[0], 0)
            chain_add_term(out, (D.pi[wrd[0]], wrd[1:]), coeff)
        if degs[p - 1] == 0:
            coeff = D.eps_tilde.get(wrd[p - 1], 0)
            sign = 1 if ex[p] % 2 == 0 else -1
            chain_add_term(out, (D.pi[wrd[p - 1]], wrd[:-1]), sign * coeff)
        return out

    diff = {w: word_diff(w) for ws in basis.values() for w in ws}
    diff_fn = word_diff

    def shuffle(wa, wb):
        if not wa:
            return {(e, wb): 1}
        if not wb:
            return {(e, wa): 1}
        p, q = len(wa), len(wb)
        degsA = [D.degree_of[g] for g in wa]
        degsB = [D.degree_of[g] for g in wb]
        out = {}
        for apos in combinations(range(p + q), p):
            apos_set = set(apos)
            bpos_list = [pos for pos in range(p + q) if pos not in apos_set]
            exponent = 0
            merged = []
            ai = bi = 0
            for pos in range(p + q):
                if pos in apos_set:
                    for j, bp in enumerate(bpos_list):
                        if bp < pos:
                            exponent += (1 + degsA[ai]) * (1 + degsB[j])
                    merged.append(wa[ai])
                    ai += 1
                else:
                    merged.append(wb[bi])
                    bi += 1
            chain_add_term(out, (e, tuple(merged)), 1 if exponent % 2 == 0 else -1)
        return out

    return FreeBasedDGA(
        monoid=M, degmax=degmax, basis=basis, pi=pi, diff=diff,
        product_fn=shuffle, unit=(), eps_tilde={(): 1}, diff_fn=diff_fn,
    )


def _compositions(total, parts, maxpart):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, maxpart), 0, -1):
        for rest in _compositions(total - first, parts - 1, maxpart):
            yield (first,) + rest


def iterated_bar(M, r, degmax):
    """The r-fold bar construction on the monoid algebra, with cells
    stored as flat separator words."""
    if not isinstance(M, FiniteCommutativeMonoid):
        raise DGAError("iterated_bar needs a finite monoid")
    if r < 1:
        raise DGAError("level must be >= 1")
    if degmax < r:
        raise DGAError("degmax %d below the lowest positive cell degree %d" % (degmax, r))
    nonunit = M.nonunit()
    empty = BarWord((), (), r)
    basis = {0: (empty,)}
    for n in range(r, degmax + 1):
        cells = []
        total = n - r
        for m in range(total + 1, 0, -1):
            if m - 1 > total or total > (m - 1) * r:
                continue
            for seps in _compositions(total, m - 1, r):
                for letters in product(nonunit, repeat=m):
                    cells.append(BarWord(letters, seps, r))
        if cells:
            basis[n] = tuple(cells)
    pi = {w: w.pi(M) for ws in basis.values() for w in ws}
    diff = {w: bar_word_diff(M, w) for ws in basis.values() for w in ws}

    def shuffle(a, b):
        return bar_word_shuffle(M, a, b)

    return FreeBasedDGA(
        monoid=M, degmax=degmax, basis=basis, pi=pi, diff=diff,
        product_fn=shuffle, unit=empty, eps_tilde={empty: 1},
        diff_fn=lambda w: bar_word_diff(M, w),
    )


def shuffle_product(M, a, b):
    """Public entry point for the shuffle product of two flat words."""
    return bar_word_shuffle(M, a, b)


# -- structural validation ----------------------------------------------------

def _sample_translate(M):
    if isinstance(M, FiniteCommutativeMonoid):
        return next((x for x in range(M.size) if x != M.identity), None)
    return 1  # infinite cyclic


def validate_dga(D, product_degree_cap=5, triple_degree_cap=5):
    """Check the DGA laws on basis generators: d d = 0, projection
    compatibility, the augmentation killing boundaries, graded
    commutativity, associativity, the unit law, Leibniz, and linearity
    of the product over translations.  Returns a list of violations."""
    M = D.monoid
    e = M.identity
    bad = []
    gens = [(d, g) for d in sorted(D.basis) for g in D.basis[d]]

    if D.degree_of.get(D.unit) != 0:
        bad.append(("unit-degree", D.unit))
    if D.eps_tilde.get(D.unit) != 1:
        bad.append(("unit-augmentation", D.unit))

    for d, g in gens:
        for (u, h), c in D.differential(g).items():
            if D.degree_of[h] != d - 1:
                bad.append(("diff-degree", g))
            if M.op(u, D.pi[h]) != D.pi[g]:
                bad.append(("diff-pi", g))
        if D.diff_chain(D.differential(g)):
            bad.append(("dd", g))
        if d == 1 and D.eps_of_chain(D.differential(g)) != 0:
            bad.append(("eps-boundary", g))

    for d1, g in gens:
        ch = D.product_fn(g, D.unit)
        if ch != unit_chain(M, g):
            bad.append(("unit-law-right", g))
        ch = D.product_fn(D.unit, g)
        if ch != unit_chain(M, g):
            bad.append(("unit-law-left", g))

    pair_cap = min(product_degree_cap, D.degmax)
    triple_cap = min(triple_degree_cap, D.degmax)
    pairs = [(g, h, d1, d2) for d1, g in gens for d2, h in gens
             if d1 + d2 <= pair_cap]
    for g, h, d1, d2 in pairs:
        gh = D.product_fn(g, h)
        for (u, k), c in gh.items():
            if D.degree_of.get(k, d1 + d2) != d1 + d2:
                bad.append(("product-degree", (g, h)))
            if M.op(u, D.pi[k]) != M.op(D.pi[g], D.pi[h]):
                bad.append(("product-pi", (g, h)))
        hg = D.product_fn(h, g)
        sign = -1 if (d1 * d2) % 2 else 1
        if gh != chain_scaled(hg, sign):
            bad.append(("commutativity", (g, h)))
        # Leibniz
        lhs = D.diff_chain(gh)
        rhs = chain_sum(
            D.product(D.differential(g), unit_chain(M, h)),
            chain_scaled(D.product(unit_chain(M, g), D.differential(h)),
                         -1 if d1 % 2 else 1))
        if lhs != rhs:
            bad.append(("leibniz", (g, h)))
        # translation linearity of the product (sample translate)
        u = _sample_translate(M)
        if u is not None:
            lhs2 = D.product({(u, g): 1}, unit_chain(M, h))
            rhs2 = chain_translate(M, gh, u)
            if lhs2 != rhs2:
                bad.append(("translation-linearity", (g, h)))

    triples = [(g, h, k) for d1, g in gens for d2, h in gens for d3, k in gens
               if d1 + d2 + d3 <= triple_cap]
    for g, h, k in triples:
        lhs = D.product(D.product_fn(g, h), unit_chain(M, k))
        rhs = D.product(unit_chain(M, g), D.product_fn(h, k))
        if lhs != rhs:
            bad.append(("associativity", (g, h, k)))
    return bad
