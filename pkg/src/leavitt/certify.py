"""Verification engines for candidate generator sets.

Three independent checks are provided:

* ``check_relations`` — exact symbolic verification of X_i Y_j = delta_ij I
  and sum_j Y_j X_j = I.
* ``generation_certificate`` / ``evaluate_certificate`` — for sets produced
  by the main construction, an explicit expression DAG over the generators
  whose named nodes evaluate to prescribed targets (partial-sum idempotents,
  matrix units, x_w e_{i,j}, y_w e_{i,j}), witnessing that the set generates
  the whole matrix ring.  Every node is re-evaluated from the leaves, so a
  passing replay is a proof relative only to the element arithmetic.
* ``span_closure_verify`` — a generic bounded search for arbitrary sets:
  close the linear span of {I} under one-sided multiplication by the
  generators, with products discarded once any entry exceeds the degree
  bound, and test the targets for span membership by Gaussian elimination.
  The honest negative answer is "inconclusive"; non-generation is never
  claimed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Element, Monomial
from .construct import GeneratorSet, ListEntry, the_list
from .fields import QQ
from .matrices import E, LMatrix, idem, matrix_unit, scaled_unit
from .profiles import Profile


# ---------------------------------------------------------------------------
# relation checking


@dataclass
class RelationReport:
    ok: bool
    failed_pairs: List[Tuple[int, int]]
    sum_ok: bool
    first_residual: Optional[LMatrix] = None

    def __bool__(self):
        return self.ok


def check_relations(gens: GeneratorSet) -> RelationReport:
    """Verify X_i Y_j = delta_ij I and sum_j Y_j X_j = I exactly."""
    n, d = gens.n, gens.d
    field = gens.field
    identity = LMatrix.identity(d, n, field)
    failed = []
    first_residual = None
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            prod = gens.X[i - 1] * gens.Y[j - 1]
            expect = identity if i == j else LMatrix.zero(d, n, field)
            if prod != expect:
                failed.append((i, j))
                if first_residual is None:
                    first_residual = prod - expect
    total = LMatrix.zero(d, n, field)
    for j in range(n):
        total = total + gens.Y[j] * gens.X[j]
    sum_ok = total == identity
    if not sum_ok and first_residual is None:
        first_residual = total - identity
    return RelationReport(not failed and sum_ok, failed, sum_ok, first_residual)


def check_dagger(entries: Sequence[ListEntry], n: int, field=QQ) -> bool:
    """sum over the placed monomials a of a* a = 1, exactly."""
    total = Element.zero(n, field)
    for e in entries:
        a = Element.monomial(e.monomial(), n, field)
        total = total + a.involute() * a
    return total == Element.one(n, field)


# ---------------------------------------------------------------------------
# certificates


@dataclass
class Node:
    id: str
    op: str  # "X" | "Y" | "mul" | "lin"
    args: tuple
    target: Optional[LMatrix] = None


class CertificateError(ValueError):
    """An intermediate node failed to evaluate to its target."""


class Certificate:
    """Expression DAG over the generator alphabet.

    Leaves are generator references; internal nodes are binary products and
    linear combinations.  Named nodes carry an expected target matrix.
    """

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.nodes: Dict[str, Node] = {}
        self.order: List[str] = []
        self._auto = itertools.count()
        self._mirror: Dict[str, str] = {}

    def _add(self, node: Node) -> str:
        if node.id in self.nodes:
            raise ValueError("duplicate node id %r" % node.id)
        self.nodes[node.id] = node
        self.order.append(node.id)
        return node.id

    def leaf(self, kind: str, i: int) -> str:
        nid = "%s%d" % (kind, i)
        if nid not in self.nodes:
            self._add(Node(nid, kind, (i,)))
        return nid

    def mul(self, a: str, b: str, name=None, target=None) -> str:
        nid = name or "_m%d" % next(self._auto)
        return self._add(Node(nid, "mul", (a, b), target))

    def lin(self, combo, name=None, target=None) -> str:
        """combo: sequence of (coeff, node_id)."""
        nid = name or "_l%d" % next(self._auto)
        return self._add(Node(nid, "lin", tuple(combo), target))

    def chain(self, ids, name=None, target=None) -> str:
        """Left-associated product of two or more nodes."""
        cur = ids[0]
        for nxt in ids[1:-1]:
            cur = self.mul(cur, nxt)
        return self.mul(cur, ids[-1], name=name, target=target)

    def dual(self, nid: str, name=None, target=None) -> str:
        """Mirror image of a node: reverse products, swap X_i with Y_i.

        Mirrors are cached on the certificate so shared subtrees are only
        mirrored once across all ``dual`` calls.
        """
        memo = self._mirror

        def mirror(node_id):
            if node_id in memo:
                return memo[node_id]
            node = self.nodes[node_id]
            if node.op == "X":
                out = self.leaf("Y", node.args[0])
            elif node.op == "Y":
                out = self.leaf("X", node.args[0])
            elif node.op == "mul":
                a, b = node.args
                out = self.mul(mirror(b), mirror(a))
            else:
                out = self.lin([(c, mirror(arg)) for c, arg in node.args])
            memo[node_id] = out
            memo.setdefault(out, node_id)
            return out

        node = self.nodes[nid]
        if node.op in ("X", "Y"):
            base = mirror(nid)
            if name is None and target is None:
                return base
            return self.lin([(1, base)], name=name, target=target)
        if node.op == "mul":
            a, b = node.args
            out = self.mul(mirror(b), mirror(a), name=name, target=target)
        else:
            out = self.lin(
                [(c, mirror(arg)) for c, arg in node.args], name=name, target=target
            )
        memo.setdefault(nid, out)
        memo.setdefault(out, nid)
        return out

    def named_nodes(self):
        return [self.nodes[i] for i in self.order if self.nodes[i].target is not None]

    def to_json(self):
        out = []
        for nid in self.order:
            node = self.nodes[nid]
            if node.op in ("X", "Y"):
                doc = {"id": nid, "op": node.op, "args": [node.args[0]]}
            elif node.op == "mul":
                doc = {"id": nid, "op": "mul", "args": list(node.args)}
            else:
                doc = {
                    "id": nid,
                    "op": "lin",
                    "args": [[str(c), a] for c, a in node.args],
                }
            if node.target is not None:
                doc["target"] = node.target.to_json()
            out.append(doc)
        return {"n": self.n, "d": self.d, "nodes": out}


@dataclass
class CertificateReport:
    ok: bool
    node_count: int
    checked: int
    failures: List[str]
    max_term_count: int

    def __bool__(self):
        return self.ok


def evaluate_certificate(
    cert: Certificate, gens: GeneratorSet, fail_fast: bool = False
) -> CertificateReport:
    """Replay the DAG bottom-up and compare every named node to its target."""
    values: Dict[str, LMatrix] = {}
    failures = []
    checked = 0
    max_terms = 0
    for nid in cert.order:
        node = cert.nodes[nid]
        if node.op == "X":
            val = gens.X[node.args[0] - 1]
        elif node.op == "Y":
            val = gens.Y[node.args[0] - 1]
        elif node.op == "mul":
            val = values[node.args[0]] * values[node.args[1]]
        else:
            val = LMatrix.zero(cert.d, cert.n, gens.field)
            for c, arg in node.args:
                val = val + values[arg].scale(c)
        values[nid] = val
        max_terms = max(max_terms, val.max_term_count())
        if node.target is not None:
            checked += 1
            if val != node.target:
                failures.append(nid)
                if fail_fast:
                    raise CertificateError("node %r does not match its target" % nid)
    return CertificateReport(not failures, len(cert.order), checked, failures, max_terms)


def generation_certificate(profile: Profile, gens: GeneratorSet) -> Certificate:
    """Build the full generation witness for a set from the main construction.

    Named nodes, in order: I; the partial sums E_k reached along the
    u-sequence; the diagonal idempotents e_j; the seed units e_{1,1+s} and
    e_{d,s}; all within-class units e_{a,b}; the column monomials
    x_w e_{w^,1} and y_w e_{1,w^}; the descent x_1^k e_{1,d} down to e_{1,d}
    and its dual e_{d,1}; the cross-class units; finally every x_w e_{i,j}
    and y_w e_{i,j}.
    """
    if gens.provenance != "main-construction":
        raise ValueError("certificates require a set from the main construction")
    n, d = profile.n, profile.d
    field = gens.field
    cert = Certificate(n, d)
    q, r, s = profile.q, profile.r, profile.s

    def X(i):
        return cert.leaf("X", i)

    def Y(i):
        return cert.leaf("Y", i)

    unit = lambda i, j: matrix_unit(d, n, i, j, field)
    xel = lambda w: Element.x(w, n, field)
    yel = lambda w: Element.y(w, n, field)

    node_I = cert.mul(X(1), Y(1), name="I", target=LMatrix.identity(d, n, field))

    if d == 1:
        e_nodes = {1: cert.lin([(field.one, node_I)], name="e[1]", target=unit(1, 1))}
        _column_monomial_nodes(cert, profile, gens, e_nodes, {(1, 1): e_nodes[1]})
        return cert

    # E_s = sum_{i<=q+1} Y_i X_i, then walk the u-sequence to every E_k
    combo = [(field.one, cert.mul(Y(i), X(i))) for i in range(1, q + 2)]
    node_Es = cert.lin(combo, name="E_%d" % s, target=E(d, n, s, field))
    e_big = {s: node_Es, d: node_I}
    for i in range(d - 2):
        k = profile.useq[i]
        k_next = profile.useq[i + 1]
        if k <= r - 2:
            inner = cert.chain([Y(q + 2), e_big[k], X(q + 2)])
            nid = cert.lin(
                [(field.one, node_Es), (field.one, inner)],
                name="E_%d" % k_next,
                target=E(d, n, k_next, field),
            )
        else:
            complement = cert.lin([(field.one, node_I), (-field.one, e_big[k])])
            inner = cert.chain([Y(q + 1), complement, X(q + 1)])
            nid = cert.lin(
                [(field.one, node_Es), (-field.one, inner)],
                name="E_%d" % k_next,
                target=E(d, n, k_next, field),
            )
        e_big[k_next] = nid

    e_nodes = {1: cert.lin([(field.one, e_big[1])], name="e[1]", target=unit(1, 1))}
    for j in range(2, d + 1):
        e_nodes[j] = cert.lin(
            [(field.one, e_big[j]), (-field.one, e_big[j - 1])],
            name="e[%d]" % j,
            target=unit(j, j),
        )

    # consecutive within-class units along the h-sequence
    pair_nodes: Dict[Tuple[int, int], str] = {(j, j): e_nodes[j] for j in range(1, d + 1)}

    def step_product(a, b, c_next, mid_node):
        # left factor moves the row a -> b, right factor the column b -> c_next
        left = Y(q + 2) if b == a + s else Y(q + 1)
        right = X(q + 2) if c_next == b + s else X(q + 1)
        return cert.chain(
            [left, mid_node, right],
            name="e[%d,%d]" % (b, c_next),
            target=unit(b, c_next),
        )

    def build_class_chain(indices):
        # indices: the class members in h-sequence order
        if len(indices) < 2:
            return
        a, b = indices[0], indices[1]
        if (a, b) == (1, 1 + s):
            seed = cert.chain(
                [e_nodes[1], X(q + 2), e_nodes[1 + s]],
                name="e[1,%d]" % (1 + s),
                target=unit(1, 1 + s),
            )
        else:
            assert (a, b) == (d, s)
            seed = cert.chain(
                [e_nodes[d], X(q + 1), e_nodes[s]],
                name="e[%d,%d]" % (d, s),
                target=unit(d, s),
            )
        pair_nodes[(a, b)] = seed
        for i in range(len(indices) - 2):
            pair_nodes[(indices[i + 1], indices[i + 2])] = step_product(
                indices[i], indices[i + 1], indices[i + 2], pair_nodes[(indices[i], indices[i + 1])]
            )
        # compose consecutive units into all forward pairs, then dualize
        for i in range(len(indices)):
            for j in range(i + 2, len(indices)):
                a, b = indices[i], indices[j]
                pair_nodes[(a, b)] = cert.mul(
                    pair_nodes[(indices[i], indices[j - 1])],
                    pair_nodes[(indices[j - 1], indices[j])],
                    name="e[%d,%d]" % (a, b),
                    target=unit(a, b),
                )
        for i in range(len(indices)):
            for j in range(i + 1, len(indices)):
                a, b = indices[i], indices[j]
                pair_nodes[(b, a)] = cert.dual(
                    pair_nodes[(a, b)], name="e[%d,%d]" % (b, a), target=unit(b, a)
                )

    build_class_chain(list(profile.hseq[: profile.d1]))
    build_class_chain(list(profile.hseq[profile.d1:]))

    # column monomials x_w e_{w^,1} and duals y_w e_{1,w^}
    xw_col: Dict[int, str] = {}
    yw_col: Dict[int, str] = {}
    for w in range(1, n + 1):
        q_w, what = profile.split_index(w)
        xw_col[w] = cert.chain(
            [e_nodes[what], X(q_w + 1), e_nodes[1]],
            name="x%de[%d,1]" % (w, what),
            target=scaled_unit(d, n, xel(w), what, 1, field),
        )
        yw_col[w] = cert.dual(
            xw_col[w],
            name="y%de[1,%d]" % (w, what),
            target=scaled_unit(d, n, yel(w), 1, what, field),
        )

    # descent: from x_1^{d-1} e_{1,d} down to e_{1,d}
    placement = gens.placement
    m0, l0 = placement.box_of(ListEntry(1, d - 1))
    head = cert.chain(
        [e_nodes[l0], X(m0), e_nodes[d]],
        target=scaled_unit(d, n, Element.monomial(Monomial((), (1,) * (d - 1)), n, field), l0, d, field),
    )
    if l0 != 1:
        head = cert.mul(pair_nodes[(1, l0)], head)
    power = lambda k: Element.monomial(Monomial((), (1,) * k), n, field)
    cur = cert.lin(
        [(field.one, head)],
        name="x1^%de[1,%d]" % (d - 1, d),
        target=scaled_unit(d, n, power(d - 1), 1, d, field),
    )
    y1e1 = yw_col[1]
    for k in range(d - 1, 0, -1):
        combo = [(field.one, cert.mul(y1e1, cur))]
        for w in range(2, n + 1):
            _, what = profile.split_index(w)
            m_w, row_w = placement.box_of(ListEntry(w, k - 1))
            mono = Element.monomial(Monomial((), (w,) + (1,) * (k - 1)), n, field)
            piece = cert.chain(
                [e_nodes[row_w], X(m_w), e_nodes[d]],
                target=scaled_unit(d, n, mono, row_w, d, field),
            )
            if row_w != what:
                piece = cert.mul(pair_nodes[(what, row_w)], piece)
            combo.append((field.one, cert.mul(yw_col[w], piece)))
        name = "e[1,%d]" % d if k == 1 else "x1^%de[1,%d]" % (k - 1, d)
        cur = cert.lin(
            combo, name=name, target=scaled_unit(d, n, power(k - 1), 1, d, field)
        )
    pair_nodes[(1, d)] = cur
    pair_nodes[(d, 1)] = cert.dual(cur, name="e[%d,1]" % d, target=unit(d, 1))

    # cross-class units through the (1,d) bridge
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            if (i, j) in pair_nodes:
                continue
            if profile.class_of(i) == 1:
                left, mid, right = pair_nodes[(i, 1)], pair_nodes[(1, d)], pair_nodes[(d, j)]
            else:
                left, mid, right = pair_nodes[(i, d)], pair_nodes[(d, 1)], pair_nodes[(1, j)]
            pair_nodes[(i, j)] = cert.chain(
                [left, mid, right], name="e[%d,%d]" % (i, j), target=unit(i, j)
            )

    _column_monomial_nodes(cert, profile, gens, e_nodes, pair_nodes, xw_col)
    return cert


def _column_monomial_nodes(cert, profile, gens, e_nodes, pair_nodes, xw_col=None):
    """Nodes for every x_w e_{i,j} (and dual y_w e_{i,j})."""
    n, d = profile.n, profile.d
    field = gens.field

    if xw_col is None:
        # d = 1: x_w e_{1,1} = e_1 X_w e_1 directly
        xw_col = {}
        for w in range(1, n + 1):
            xw_col[w] = cert.chain(
                [e_nodes[1], cert.leaf("X", w), e_nodes[1]],
                name="x%de[1,1]" % w,
                target=scaled_unit(d, n, Element.x(w, n, field), 1, 1, field),
            )
            cert.dual(
                xw_col[w],
                name="y%de[1,1]" % w,
                target=scaled_unit(d, n, Element.y(w, n, field), 1, 1, field),
            )
        return

    for w in range(1, n + 1):
        _, what = profile.split_index(w)
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                if i == what and j == 1:
                    continue  # already present as the column node
                node = xw_col[w]
                if i != what:
                    node = cert.mul(pair_nodes[(i, what)], node)
                if j != 1:
                    node = cert.mul(node, pair_nodes[(1, j)])
                xe = scaled_unit(d, n, Element.x(w, n, field), i, j, field)
                nid = cert.lin(
                    [(field.one, node)], name="x%de[%d,%d]" % (w, i, j), target=xe
                )
                cert.dual(
                    nid,
                    name="y%de[%d,%d]" % (w, j, i),
                    target=scaled_unit(d, n, Element.y(w, n, field), j, i, field),
                )
        # dual of the column node itself covers y_w e_{1,what}


# ---------------------------------------------------------------------------
# bounded span closure


@dataclass
class ClosureResult:
    status: str  # "verified" | "inconclusive"
    depth: int
    basis_size: int
    products_examined: int
    missing: int = 0

    @property
    def verified(self):
        return self.status == "verified"

    def __bool__(self):
        return self.verified


def default_targets(d, n, field=QQ) -> List[LMatrix]:
    """The spanning family whose presence certifies generation: all e_{i,j},
    x_w e_{i,j} and y_w e_{i,j}."""
    targets = []
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            targets.append(matrix_unit(d, n, i, j, field))
            for w in range(1, n + 1):
                targets.append(scaled_unit(d, n, Element.x(w, n, field), i, j, field))
                targets.append(scaled_unit(d, n, Element.y(w, n, field), i, j, field))
    return targets


def _vectorize(mat: LMatrix):
    vec = {}
    for (i, j), e in mat.entries.items():
        for m, c in e.terms.items():
            vec[(len(m.yword), len(m.xword), m.yword, m.xword, i, j)] = c
    return vec


def _reduce_vec(vec, pivots):
    vec = dict(vec)
    while vec:
        lead = min(vec)
        hit = pivots.get(lead)
        if hit is None:
            return vec, lead
        c = vec[lead]
        for k, v in hit.items():
            cur = vec.get(k)
            nv = (cur if cur is not None else 0) - c * v
            if nv:
                vec[k] = nv
            else:
                vec.pop(k, None)
    return vec, None


class _SpanBasis:
    """Row-reduced spanning set over interned monomial coordinates.

    Over the rationals the rows are kept as integer vectors and reduced
    fraction-free, which is substantially faster than fraction arithmetic
    and changes nothing about the spanned subspace.
    """

    def __init__(self, field):
        self.field = field
        self.exact_int = isinstance(field.zero, Fraction)
        self._ids: Dict[tuple, int] = {}
        self.pivots: Dict[int, dict] = {}

    def __len__(self):
        return len(self.pivots)

    def vectorize(self, mat: LMatrix) -> dict:
        ids = self._ids
        vec = {}
        for (i, j), e in mat.entries.items():
            for m, c in e.terms.items():
                key = (len(m.yword), len(m.xword), m.yword, m.xword, i, j)
                k = ids.get(key)
                if k is None:
                    k = ids[key] = len(ids)
                vec[k] = self._scalar(c)
        return vec

    def _scalar(self, c):
        if self.exact_int:
            frac = Fraction(c)
            if frac.denominator != 1:
                raise ValueError("non-integer coefficient in closure input")
            return frac.numerator
        return c

    def _reduce(self, vec):
        pivots = self.pivots
        while vec:
            lead = min(vec)
            row = pivots.get(lead)
            if row is None:
                return vec, lead
            c = vec.pop(lead)
            if self.exact_int:
                p = row[lead]
                for k, v in row.items():
                    if k == lead:
                        continue
                    nv = p * vec.get(k, 0) - c * v
                    if nv:
                        vec[k] = nv
                    else:
                        vec.pop(k, None)
                for k in [k for k, v in vec.items() if not v]:
                    del vec[k]
                if vec:
                    g = 0
                    for v in vec.values():
                        g = gcd(g, v)
                    if g > 1:
                        for k in vec:
                            vec[k] //= g
            else:
                for k, v in row.items():
                    if k == lead:
                        continue
                    nv = vec.get(k, self.field.zero) - c * v
                    if nv:
                        vec[k] = nv
                    else:
                        vec.pop(k, None)
        return vec, None

    def insert(self, mat: LMatrix) -> bool:
        vec, lead = self._reduce(self.vectorize(mat))
        if lead is None:
            return False
        if self.exact_int:
            g = 0
            for v in vec.values():
                g = gcd(g, v)
            if vec[lead] < 0:
                g = -g
            if g not in (0, 1):
                vec = {k: v // g for k, v in vec.items()}
        else:
            c = vec[lead]
            vec = {k: v / c for k, v in vec.items()}
        self.pivots[lead] = vec
        return True

    def contains(self, vec: dict) -> bool:
        residual, lead = self._reduce(dict(vec))
        return lead is None


def span_closure_verify(
    gens: GeneratorSet,
    targets: Optional[Sequence[LMatrix]] = None,
    degree_bound: int = 6,
    iteration_bound: int = 8,
) -> ClosureResult:
    """Close span{I} under one-sided multiplication, up to the given product
    depth, discarding products with any monomial longer than
    ``degree_bound``; report whether all targets fall in the span.

    The multiplier set starts as the generators and grows: whenever a target
    is detected inside the current span, that target joins the multipliers,
    and every (multiplier, basis row) pair is eventually tried, including
    pairs whose multiplier arrived after the row.  Every multiplier is a
    member of the generated subalgebra, so the span only ever contains
    subalgebra elements and "verified" is a proof.  The bootstrap mirrors
    the way matrix units bridge to one another (e.g. e_{i,1} e_{1,d} e_{d,j}
    = e_{i,j}) and keeps the basis small on generating sets.
    """
    n, d = gens.n, gens.d
    field = gens.field
    if targets is None:
        targets = default_targets(d, n, field)

    basis = _SpanBasis(field)
    target_vecs = [basis.vectorize(t) for t in targets]
    outstanding = set(range(len(target_vecs)))
    multipliers = list(gens.X) + list(gens.Y)

    mono_rows: List[LMatrix] = []

    def is_mono(mat):
        if len(mat.entries) != 1:
            return False
        (elem,) = mat.entries.values()
        return len(elem.terms) == 1

    def insert(mat):
        if not basis.insert(mat):
            return False
        if is_mono(mat):
            mono_rows.append(mat)
        return True

    def sweep():
        newly = []
        for k in sorted(outstanding):
            if basis.contains(target_vecs[k]):
                outstanding.discard(k)
                multipliers.append(targets[k])
                newly.append(targets[k])
        return newly

    identity = LMatrix.identity(d, n, field)
    insert(identity)
    frontier = [identity]
    examined = 0
    depth = 0
    while frontier and outstanding and depth < iteration_bound:
        depth += 1
        new_frontier = []
        pending = list(frontier)
        while pending:
            mat = pending.pop()
            dirty = False
            for g in multipliers:
                for prod in (g * mat, mat * g):
                    examined += 1
                    if prod.is_zero() or prod.max_word_length() > degree_bound:
                        continue
                    if insert(prod):
                        new_frontier.append(prod)
                        dirty = True
            if dirty and outstanding:
                # newly covered targets join the queue right away so
                # cascades complete within the current round
                pending.extend(sweep())
            if not outstanding:
                break
        frontier = new_frontier
    sweep()

    # Completion phase: the breadth-first rounds never pair a row with a
    # multiplier that was covered after the row left the frontier.  For the
    # bridging products that matter (stripping a letter off a compound
    # entry) the row is a one-entry monomial and the late multiplier is a
    # covered target, so only those pairs are retried, to a fixpoint.
    generator_count = len(gens.X) + len(gens.Y)
    tried: Dict[int, int] = {}
    boosted = False
    passes = 0
    while outstanding and passes < iteration_bound:
        passes += 1
        progress = False
        i = 0
        while i < len(mono_rows) and outstanding:
            mat = mono_rows[i]
            start = tried.get(i, generator_count)
            stop = len(multipliers)
            dirty = False
            for idx in range(start, stop):
                g = multipliers[idx]
                for prod in (g * mat, mat * g):
                    examined += 1
                    if prod.is_zero() or prod.max_word_length() > degree_bound:
                        continue
                    if insert(prod):
                        dirty = True
                        progress = True
            tried[i] = stop
            if dirty:
                sweep()
            i += 1
        if not progress:
            if boosted:
                break
            # last resort: covered targets are span members but usually not
            # basis rows, so target-by-target products were never formed;
            # promote them to rows and go one more round
            boosted = True
            mono_rows.extend(multipliers[generator_count:])

    if not outstanding:
        return ClosureResult("verified", depth, len(basis), examined)
    return ClosureResult("inconclusive", depth, len(basis), examined, len(outstanding))
