"""Endomorphism algebras of module direct sums, presented as bound quiver
algebras.

For pairwise non-isomorphic indecomposable summands M_1, ..., M_t the
opposite endomorphism algebra of their sum is basic with one vertex per
summand; Hom(M_j, M_i) realises the path block i -> j.  The algebra is
rebuilt from its Gabriel presentation (arrows = a complement of the radical
square, relations = kernels of the evaluation, degree by degree) so the
result carries the same path-graded structure as every other algebra here.
"""

from __future__ import annotations

from .errors import QfabError, SummandsNotDistinct, SummandDecomposable
from .linalg import Matrix, Subspace, from_columns, solve
from .quiver import Quiver, Arrow, PathWord, Relation, Presentation
from .algebra import build_algebra
from . import modules as md


class EndoData:
    """Extraction result: the algebra, its presentation, and hom lifts."""

    def __init__(self, algebra, presentation, summands, arrow_maps, idempotent_of_summand):
        self.algebra = algebra
        self.presentation = presentation
        self.summands = summands
        self.arrow_maps = arrow_maps            # arrow id -> ModuleMap
        self.idempotent_of_summand = idempotent_of_summand  # index -> vertex id

    def basis_map(self, basis_idx):
        """The endomorphism realising a basis element of the algebra."""
        b = self.algebra.basis[basis_idx]
        if b.length == 0:
            s = self.algebra.vertices[b.source]
            i = [k for k, v in self.idempotent_of_summand.items() if v == s][0]
            return md.ModuleMap.identity(self.summands[i])
        arrows = self.presentation.quiver.arrows
        f = self.arrow_maps[arrows[b.word[0]].id]
        for a_pos in b.word[1:]:
            g = self.arrow_maps[arrows[a_pos].id]
            # path extension a . p composes on the module side as p o a
            f = f.compose(g)
        return f


def endomorphism_algebra(summands, seed=0, validate=True):
    """End(M_1 + ... + M_t)^op as a bound quiver algebra.

    Raises SummandsNotDistinct / SummandDecomposable when the input is not a
    list of pairwise non-isomorphic indecomposables.
    """
    if not summands:
        raise QfabError("no summands")
    A = summands[0].algebra
    for M in summands:
        if M.algebra is not A:
            raise QfabError("summands over different algebras")
    t = len(summands)
    if validate:
        for i in range(t):
            if not md.is_indecomposable(summands[i]):
                raise SummandDecomposable(f"summand {i} is decomposable")
            for j in range(i + 1, t):
                if summands[i].dims == summands[j].dims and \
                        md.is_isomorphic(summands[i], summands[j], seed=seed):
                    raise SummandsNotDistinct(f"summands {i} and {j} are isomorphic")

    field = A.field
    # block (s, t): algebra elements s -> t are Hom(M_t, M_s)
    hom = {}
    for s in range(t):
        for u in range(t):
            hom[(s, u)] = md.hom_space(summands[u], summands[s])

    # diagonal re-basing: identity + radical part (phi minus its scalar part)
    def scalar_part(M, phi):
        tr = field.zero
        for m in phi.mats:
            for r in range(m.rows):
                tr = tr + m.data[r][r]
        return tr / field.coerce(M.total_dim)

    raw = []      # (s, u, ModuleMap), s -> u in the algebra
    idem_idx = {}
    for v in range(t):
        idem_idx[v] = len(raw)
        raw.append((v, v, md.ModuleMap.identity(summands[v])))
    rad_indices = []
    for v in range(t):
        block = []
        for phi in hom[(v, v)]:
            lam = scalar_part(summands[v], phi)
            psi = phi + md.ModuleMap.identity(summands[v]).scale(-lam)
            if not psi.is_zero():
                block.append(psi)
        block = _echelon_maps(block, field)
        for psi in block:
            rad_indices.append(len(raw))
            raw.append((v, v, psi))
    for s in range(t):
        for u in range(t):
            if s == u:
                continue
            # element s -> u is realised by a map M_u -> M_s
            for phi in _echelon_maps(hom[(s, u)], field):
                rad_indices.append(len(raw))
                raw.append((s, u, phi))

    dim = len(raw)
    block_members = {}
    for i, (s, u, phi) in enumerate(raw):
        block_members.setdefault((s, u), []).append(i)
    flat = {i: _flatten(phi) for i, (s, u, phi) in enumerate(raw)}
    block_mat = {}
    for key, members in block_members.items():
        cols = [flat[i] for i in members]
        block_mat[key] = from_columns(cols, len(cols[0]), field)

    def mult_raw(i, j):
        """raw[i] . raw[j] (apply j first) in raw coordinates."""
        si, ui, phi_i = raw[i]
        sj, uj, phi_j = raw[j]
        if uj != si:
            return {}
        comp = phi_j.compose(phi_i)       # module side reverses
        key = (sj, ui)
        x = solve(block_mat[key], _flatten(comp))
        if x is None:
            raise QfabError("endomorphism composition left its block")
        return {block_members[key][k]: c for k, c in enumerate(x)
                if c != field.zero}

    # radical square and arrow choice
    rad2 = {key: Subspace(len(m), field) for key, m in block_members.items()}
    for i in rad_indices:
        for j in rad_indices:
            prod = mult_raw(i, j)
            if prod:
                key = (raw[j][0], raw[i][1])
                dense = [field.zero] * len(block_members[key])
                pos = {b: k for k, b in enumerate(block_members[key])}
                for b, c in prod.items():
                    dense[pos[b]] = c
                rad2[key].insert(dense)
    gen_list = []
    for i in rad_indices:
        key = (raw[i][0], raw[i][1])
        pos = {b: k for k, b in enumerate(block_members[key])}
        unit = [field.zero] * len(block_members[key])
        unit[pos[i]] = field.one
        if rad2[key].insert(unit):
            gen_list.append(i)

    vertex_ids = [f"m{v}" for v in range(t)]
    arrows = []
    for k, g in enumerate(gen_list):
        s, u, _ = raw[g]
        arrows.append(Arrow(f"x{k}", vertex_ids[s], vertex_ids[u]))
    Q = Quiver(vertex_ids, arrows)

    # degree-by-degree relation extraction (evaluation into raw coordinates)
    elems = []
    for k, g in enumerate(gen_list):
        s, u, _ = raw[g]
        elems.append(((k,), s, u, {g: field.one}))
    relations = []
    prev = list(range(len(elems)))
    degree = 2

    def mult_vec_raw(vec_a, vec_b):
        out = {}
        for i, ca in vec_a.items():
            for j, cb in vec_b.items():
                for k2, ck in mult_raw(i, j).items():
                    s2 = out.get(k2, field.zero) + ca * cb * ck
                    if s2 == field.zero:
                        out.pop(k2, None)
                    else:
                        out[k2] = s2
        return out

    while prev and degree <= dim + 2:
        blocks = {}
        for k, g in enumerate(gen_list):
            gs, gu, _ = raw[g]
            for e in prev:
                word, s, u, ev = elems[e]
                if u == gs:
                    blocks.setdefault((s, gu), []).append((k, e))
        new = []
        for key in sorted(blocks):
            cc = sorted(blocks[key], key=lambda ke: elems[ke[1]][0] + (ke[0],))
            sub = Subspace(dim, field)
            chosen = []
            for k, e in cc:
                val = mult_vec_raw({gen_list[k]: field.one}, elems[e][3])
                dense = [field.zero] * dim
                for i, c in val.items():
                    dense[i] = c
                if sub.insert(dense):
                    chosen.append(((k, e), val))
                else:
                    mat = from_columns([_densify(v, dim, field) for _, v in chosen],
                                       dim, field)
                    x = solve(mat, dense) if chosen else []
                    terms = [(field.one, PathWord(Q, elems[e][0] + (k,)))]
                    for pos2, c in enumerate(x):
                        if c != field.zero:
                            (k2, e2), _ = chosen[pos2]
                            terms.append((-c, PathWord(Q, elems[e2][0] + (k2,))))
                    relations.append(Relation(terms))
            for (k, e), val in chosen:
                new.append(len(elems))
                elems.append((elems[e][0] + (k,), key[0], key[1], val))
        prev = new
        degree += 1

    pres = Presentation(Q, relations, name="endomorphism algebra")
    B = build_algebra(pres, field)
    if B.dim != dim:
        raise QfabError(f"extracted algebra dimension {B.dim} != hom dimension {dim}")
    arrow_maps = {f"x{k}": raw[g][2] for k, g in enumerate(gen_list)}
    idem_of = {v: vertex_ids[v] for v in range(t)}
    return EndoData(B, pres, list(summands), arrow_maps, idem_of)


def _flatten(phi):
    v = []
    for m in phi.mats:
        for r in m.data:
            v.extend(r)
    return v


def _densify(vec, n, field):
    d = [field.zero] * n
    for i, c in vec.items():
        d[i] = c
    return d


def _echelon_maps(maps, field):
    """Deterministic echelon re-basing of a list of module maps."""
    if not maps:
        return []
    sub = Subspace(len(_flatten(maps[0])), field)
    out = []
    for phi in maps:
        if sub.insert(_flatten(phi)):
            out.append(phi)
    return out
