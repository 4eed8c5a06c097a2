"""JSON file formats for the objects the command line works with.

Every scalar in a file is a rational written as a string, "n" or "n/d";
floats never appear.  Sparse data only: omitted entries are zero.  Basis
elements are referred to by name, and all name references are validated at
load time.  ``dumps`` produces a canonical form (sorted keys, fixed
indentation), so load -> dump -> load is the identity and dumping a freshly
loaded canonical file reproduces it byte for byte.

Kinds:

  leibniz_algebra   name, basis, bracket entries {left, right, value}
  assoc_algebra     name, basis, product entries {left, right, value}
  xmod              q, p (inline or by path), eta, action {left, right}
  rep               algebra, module basis, left/right entries {p, m, value}
  xmod_rep          xmod, n/m bases, mu, four action tables, xi1/xi2
  module            algebra, module basis, generator matrices keyed "b_l"
                    and "b_r" per algebra basis name b

Sub-objects may be inlined or referenced by a path string, resolved
relative to the referencing file.
"""

import json
import os

from .scalars import rat_from_str, rat_to_str
from .linalg import LinearMap
from .leibniz import (LeibnizAlgebra, LeibnizAction, LeibnizRep)
from .assoc import AssocAlgebra
from .xmod import LeibnizXMod
from .xrep import LeibnizXModRep


class FormatError(ValueError):
    """Malformed or inconsistent input file; maps to exit code 2."""


# ---------------------------------------------------------------------------
# helpers


def _need(data, key, kind):
    if key not in data:
        raise FormatError("%s file is missing %r" % (kind, key))
    return data[key]


def _basis_index(names, kind):
    names = list(names)
    if len(set(names)) != len(names):
        raise FormatError("%s file has duplicate basis names" % kind)
    return {b: i for i, b in enumerate(names)}


def _rat(s):
    if not isinstance(s, str):
        raise FormatError("rational values must be strings, got %r" % (s,))
    try:
        return rat_from_str(s)
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError("bad rational %r: %s" % (s, e))


def _value_vec(value, index, where):
    """A {basis name: rational string} map as a dense coefficient list."""
    out = [0] * len(index)
    if not isinstance(value, dict):
        raise FormatError("%s: value must be an object" % where)
    for name, s in value.items():
        if name not in index:
            raise FormatError("%s: unknown basis element %r" % (where, name))
        out[index[name]] = _rat(s)
    return out


def _tensor_from_entries(entries, key1, key2, idx1, idx2, idx_out, where):
    t = [[[0] * len(idx_out) for _ in idx2] for _ in idx1]
    for e in entries:
        n1, n2 = _need(e, key1, where), _need(e, key2, where)
        if n1 not in idx1 or n2 not in idx2:
            raise FormatError("%s: unknown basis element in entry (%r, %r)"
                              % (where, n1, n2))
        t[idx1[n1]][idx2[n2]] = _value_vec(_need(e, "value", where), idx_out,
                                           where)
    return t


def _entries_from_tensor(basis1, basis2, basis_out, value_at):
    out = []
    for i, b1 in enumerate(basis1):
        for j, b2 in enumerate(basis2):
            v = value_at(i, j)
            if v:
                out.append({"left": b1, "right": b2,
                            "value": {basis_out[k]: rat_to_str(c)
                                      for k, c in sorted(v.items())}})
    return out


def _matrix_cols(data, src_index, dst_index, where):
    """{src name: {dst name: rat}} as a LinearMap src -> dst."""
    cols = [{} for _ in src_index]
    if not isinstance(data, dict):
        raise FormatError("%s: matrix must be an object" % where)
    for name, col in data.items():
        if name not in src_index:
            raise FormatError("%s: unknown column %r" % (where, name))
        dense = _value_vec(col, dst_index, where)
        cols[src_index[name]] = {k: v for k, v in enumerate(dense) if v != 0}
    return LinearMap.from_cols(len(dst_index), cols)


def _matrix_dump(f, src_names, dst_names):
    out = {}
    for j, name in enumerate(src_names):
        col = f.col(j)
        if col:
            out[name] = {dst_names[i]: rat_to_str(c)
                         for i, c in sorted(col.items())}
    return out


def _gen_names(prefix, n):
    return ["%s%d" % (prefix, i) for i in range(n)]


# ---------------------------------------------------------------------------
# algebras


def _load_algebra(data, kind, cls, table_key):
    name = _need(data, "name", kind)
    basis = _need(data, "basis", kind)
    idx = _basis_index(basis, kind)
    entries = data.get(table_key, [])
    t = _tensor_from_entries(entries, "left", "right", idx, idx, idx,
                             "%s %s" % (kind, name))
    return cls(name, tuple(basis), t)


def _dump_algebra(alg, kind, table_key, table_basis):
    return {
        "kind": kind,
        "name": alg.name,
        "basis": list(alg.basis),
        table_key: _entries_from_tensor(
            alg.basis, alg.basis, alg.basis,
            lambda i, j: table_basis(i, j)),
    }


# ---------------------------------------------------------------------------
# crossed modules


def _load_xmod(data, base_dir):
    q = _load_sub(data, "q", "leibniz_algebra", base_dir, "xmod")
    p = _load_sub(data, "p", "leibniz_algebra", base_dir, "xmod")
    qi = _basis_index(q.basis, "xmod q")
    pi = _basis_index(p.basis, "xmod p")
    eta = _matrix_cols(data.get("eta", {}), qi, pi, "xmod eta")
    action = _need(data, "action", "xmod")
    left = _tensor_from_entries(action.get("left", []), "p", "q",
                                pi, qi, qi, "xmod action left")
    right = _tensor_from_entries(action.get("right", []), "q", "p",
                                 qi, pi, qi, "xmod action right")
    return LeibnizXMod(q, p, eta, LeibnizAction(p, q, left, right))


def _dump_xmod(x):
    act = x.action
    left = []
    for i, pb in enumerate(x.p.basis):
        for j, qb in enumerate(x.q.basis):
            v = {k: c for k, c in enumerate(act.left_tensor[i][j]) if c != 0}
            if v:
                left.append({"p": pb, "q": qb,
                             "value": {x.q.basis[k]: rat_to_str(c)
                                       for k, c in sorted(v.items())}})
    right = []
    for j, qb in enumerate(x.q.basis):
        for i, pb in enumerate(x.p.basis):
            v = {k: c for k, c in enumerate(act.right_tensor[j][i]) if c != 0}
            if v:
                right.append({"q": qb, "p": pb,
                              "value": {x.q.basis[k]: rat_to_str(c)
                                        for k, c in sorted(v.items())}})
    return {
        "kind": "xmod",
        "q": _dump_algebra(x.q, "leibniz_algebra", "bracket",
                           x.q.bracket_basis),
        "p": _dump_algebra(x.p, "leibniz_algebra", "bracket",
                           x.p.bracket_basis),
        "eta": _matrix_dump(x.eta, x.q.basis, x.p.basis),
        "action": {"left": left, "right": right},
    }


# ---------------------------------------------------------------------------
# representations


def _action_mats(entries, pkey, mkey, p_idx, m_idx, where):
    t = _tensor_from_entries(entries, pkey, mkey, p_idx, m_idx, m_idx, where)
    mats = []
    for i in range(len(p_idx)):
        cols = [{k: v for k, v in enumerate(t[i][j]) if v != 0}
                for j in range(len(m_idx))]
        mats.append(LinearMap.from_cols(len(m_idx), cols))
    return tuple(mats)


def _action_entries(mats, pkey, mkey, p_names, m_names):
    out = []
    for i, pb in enumerate(p_names):
        for j, mb in enumerate(m_names):
            col = mats[i].col(j)
            if col:
                out.append({pkey: pb, mkey: mb,
                            "value": {m_names[k]: rat_to_str(c)
                                      for k, c in sorted(col.items())}})
    return out


def _load_rep(data, base_dir):
    p = _load_sub(data, "algebra", "leibniz_algebra", base_dir, "rep")
    module = _need(data, "module", "rep")
    mi = _basis_index(module, "rep module")
    pi = _basis_index(p.basis, "rep algebra")
    left = _action_mats(data.get("left", []), "p", "m", pi, mi, "rep left")
    right_t = _tensor_from_entries(data.get("right", []), "m", "p",
                                   mi, pi, mi, "rep right")
    right = []
    for i in range(p.dim):
        cols = [{k: v for k, v in enumerate(right_t[j][i]) if v != 0}
                for j in range(len(mi))]
        right.append(LinearMap.from_cols(len(mi), cols))
    return LeibnizRep(p, len(module), left, tuple(right))


def _dump_rep(rep):
    m_names = _gen_names("m", rep.module_dim)
    right = []
    for j, mb in enumerate(m_names):
        for i, pb in enumerate(rep.algebra.basis):
            col = rep.right_mats[i].col(j)
            if col:
                right.append({"m": mb, "p": pb,
                              "value": {m_names[k]: rat_to_str(c)
                                        for k, c in sorted(col.items())}})
    return {
        "kind": "rep",
        "algebra": _dump_algebra(rep.algebra, "leibniz_algebra", "bracket",
                                 rep.algebra.bracket_basis),
        "module": m_names,
        "left": _action_entries(rep.left_mats, "p", "m",
                                rep.algebra.basis, m_names),
        "right": right,
    }


def _load_xmod_rep(data, base_dir):
    x = _load_sub(data, "xmod", "xmod", base_dir, "xmod_rep")
    n_names = _need(data, "n", "xmod_rep")
    m_names = _need(data, "m", "xmod_rep")
    ni = _basis_index(n_names, "xmod_rep n")
    mi = _basis_index(m_names, "xmod_rep m")
    pi = _basis_index(x.p.basis, "xmod_rep p")
    qi = _basis_index(x.q.basis, "xmod_rep q")
    mu = _matrix_cols(data.get("mu", {}), ni, mi, "xmod_rep mu")

    def rep_of(prefix, idx):
        left = _action_mats(data.get(prefix + "_left", []), "p", "m",
                            pi, idx, "xmod_rep " + prefix)
        t = _tensor_from_entries(data.get(prefix + "_right", []), "m", "p",
                                 idx, pi, idx, "xmod_rep " + prefix)
        right = tuple(
            LinearMap.from_cols(
                len(idx),
                [{k: v for k, v in enumerate(t[j][i]) if v != 0}
                 for j in range(len(idx))])
            for i in range(x.p.dim))
        return LeibnizRep(x.p, len(idx), left, right)

    rep_n, rep_m = rep_of("n", ni), rep_of("m", mi)
    xi1_t = _tensor_from_entries(data.get("xi1", []), "q", "m",
                                 qi, mi, ni, "xmod_rep xi1")
    xi2_t = _tensor_from_entries(data.get("xi2", []), "m", "q",
                                 mi, qi, ni, "xmod_rep xi2")
    xi1 = tuple(
        LinearMap.from_cols(
            len(ni), [{k: v for k, v in enumerate(xi1_t[j][jm]) if v != 0}
                      for jm in range(len(mi))])
        for j in range(x.q.dim))
    xi2 = tuple(
        LinearMap.from_cols(
            len(ni), [{k: v for k, v in enumerate(xi2_t[jm][j]) if v != 0}
                      for jm in range(len(mi))])
        for j in range(x.q.dim))
    return LeibnizXModRep(x, mu, rep_n, rep_m, xi1, xi2)


def _dump_xmod_rep(r):
    x = r.xmod
    n_names = _gen_names("n", r.n_dim)
    m_names = _gen_names("m", r.m_dim)

    def right_entries(mats, names):
        out = []
        for j, mb in enumerate(names):
            for i, pb in enumerate(x.p.basis):
                col = mats[i].col(j)
                if col:
                    out.append({"m": mb, "p": pb,
                                "value": {names[k]: rat_to_str(c)
                                          for k, c in sorted(col.items())}})
        return out

    xi1 = []
    for j, qb in enumerate(x.q.basis):
        for jm, mb in enumerate(m_names):
            col = r.xi1[j].col(jm)
            if col:
                xi1.append({"q": qb, "m": mb,
                            "value": {n_names[k]: rat_to_str(c)
                                      for k, c in sorted(col.items())}})
    xi2 = []
    for jm, mb in enumerate(m_names):
        for j, qb in enumerate(x.q.basis):
            col = r.xi2[j].col(jm)
            if col:
                xi2.append({"m": mb, "q": qb,
                            "value": {n_names[k]: rat_to_str(c)
                                      for k, c in sorted(col.items())}})
    return {
        "kind": "xmod_rep",
        "xmod": _dump_xmod(x),
        "n": n_names,
        "m": m_names,
        "mu": _matrix_dump(r.mu, n_names, m_names),
        "n_left": _action_entries(r.rep_n.left_mats, "p", "m",
                                  x.p.basis, n_names),
        "n_right": right_entries(r.rep_n.right_mats, n_names),
        "m_left": _action_entries(r.rep_m.left_mats, "p", "m",
                                  x.p.basis, m_names),
        "m_right": right_entries(r.rep_m.right_mats, m_names),
        "xi1": xi1,
        "xi2": xi2,
    }


# ---------------------------------------------------------------------------
# envelope modules


class ModuleData:
    """Generator matrices for a left module over the envelope of an
    algebra; pair with ``envelope.ul`` at a chosen degree via
    ``to_ul_module``."""

    def __init__(self, algebra, module_names, gen_mats):
        self.algebra = algebra
        self.module_names = tuple(module_names)
        self.gen_mats = tuple(gen_mats)  # l-block then r-block

    def __eq__(self, other):
        return (isinstance(other, ModuleData)
                and self.algebra == other.algebra
                and self.module_names == other.module_names
                and self.gen_mats == other.gen_mats)

    def to_ul_module(self, ulalg):
        from .envelope import ULModule
        if ulalg.p != self.algebra:
            raise ValueError("module is over a different algebra")
        return ULModule(ulalg, len(self.module_names), self.gen_mats)


def _load_module(data, base_dir):
    p = _load_sub(data, "algebra", "leibniz_algebra", base_dir, "module")
    module = _need(data, "module", "module")
    mi = _basis_index(module, "module")
    gens = _need(data, "generators", "module")
    labels = ["%s_l" % b for b in p.basis] + ["%s_r" % b for b in p.basis]
    for key in gens:
        if key not in labels:
            raise FormatError("module: unknown generator %r" % key)
    mats = [_matrix_cols(gens.get(lbl, {}), mi, mi, "module generator " + lbl)
            for lbl in labels]
    return ModuleData(p, module, mats)


def _dump_module(md):
    p = md.algebra
    labels = ["%s_l" % b for b in p.basis] + ["%s_r" % b for b in p.basis]
    gens = {}
    for lbl, f in zip(labels, md.gen_mats):
        m = _matrix_dump(f, md.module_names, md.module_names)
        if m:
            gens[lbl] = m
    return {
        "kind": "module",
        "algebra": _dump_algebra(p, "leibniz_algebra", "bracket",
                                 p.bracket_basis),
        "module": list(md.module_names),
        "generators": gens,
    }


# ---------------------------------------------------------------------------
# dispatch


def _load_sub(data, key, expected_kind, base_dir, where):
    sub = _need(data, key, where)
    if isinstance(sub, str):
        path = os.path.join(base_dir, sub)
        obj = load_path(path)
        want = _KIND_OF_TYPE.get(type(obj))
        if want != expected_kind:
            raise FormatError("%s: %r is a %s file, expected %s"
                              % (where, sub, want, expected_kind))
        return obj
    if not isinstance(sub, dict):
        raise FormatError("%s: %r must be inline or a path" % (where, key))
    if sub.get("kind", expected_kind) != expected_kind:
        raise FormatError("%s: %r has kind %r, expected %s"
                          % (where, key, sub.get("kind"), expected_kind))
    return load_data(dict(sub, kind=expected_kind), base_dir)


def load_data(data, base_dir="."):
    """Build the library object described by a parsed JSON document."""
    if not isinstance(data, dict):
        raise FormatError("top level must be an object")
    kind = _need(data, "kind", "input")
    if kind == "leibniz_algebra":
        return _load_algebra(data, kind, LeibnizAlgebra, "bracket")
    if kind == "assoc_algebra":
        return _load_algebra(data, kind, AssocAlgebra, "product")
    if kind == "xmod":
        return _load_xmod(data, base_dir)
    if kind == "rep":
        return _load_rep(data, base_dir)
    if kind == "xmod_rep":
        return _load_xmod_rep(data, base_dir)
    if kind == "module":
        return _load_module(data, base_dir)
    raise FormatError("unknown kind %r" % kind)


def load_path(path):
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise FormatError("cannot read %s: %s" % (path, e))
    except json.JSONDecodeError as e:
        raise FormatError("%s is not valid JSON: %s" % (path, e))
    return load_data(data, os.path.dirname(os.path.abspath(path)))


_KIND_OF_TYPE = {
    LeibnizAlgebra: "leibniz_algebra",
    AssocAlgebra: "assoc_algebra",
    LeibnizXMod: "xmod",
    LeibnizRep: "rep",
    LeibnizXModRep: "xmod_rep",
    ModuleData: "module",
}


def dump_data(obj):
    """The canonical JSON document for a library object."""
    if isinstance(obj, LeibnizAlgebra):
        return _dump_algebra(obj, "leibniz_algebra", "bracket",
                             obj.bracket_basis)
    if isinstance(obj, AssocAlgebra):
        return _dump_algebra(obj, "assoc_algebra", "product", obj.mult_basis)
    if isinstance(obj, LeibnizXMod):
        return _dump_xmod(obj)
    if isinstance(obj, LeibnizRep):
        return _dump_rep(obj)
    if isinstance(obj, LeibnizXModRep):
        return _dump_xmod_rep(obj)
    if isinstance(obj, ModuleData):
        return _dump_module(obj)
    raise TypeError("cannot serialize %r" % type(obj).__name__)


def dumps(obj):
    return json.dumps(dump_data(obj), indent=2, sort_keys=True,
                      ensure_ascii=False) + "\n"


def save(obj, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(obj))
