"""Canonical text rendering of elements, forms, and cross-algebra elements.

The output is valid expression-language syntax (see ``dsl``), so any printed
normal form can be replayed through ``evaluate``.  Ordering is fixed: terms
are sorted by form degree, form word, dual degree, dual word, then basis
index, making the rendering bit-for-bit reproducible.
"""

from __future__ import annotations

from fractions import Fraction


def format_scalar(q: Fraction) -> str:
    return str(q)


def _coeff_prefix(q: Fraction, first: bool) -> str:
    """Sign/coefficient prefix for a term with magnitude |q|."""
    sign = "-" if q < 0 else "+"
    mag = abs(q)
    if first:
        head = "-" if q < 0 else ""
    else:
        head = f" {sign} "
    if mag == 1:
        return head
    return f"{head}{mag} * "


def format_element(x) -> str:
    """Render a Hopf-algebra element as a signed sum of basis atoms."""
    atom = x.hopf.basis_atom
    names = x.hopf.basis_names
    parts = []
    first = True
    for i, c in enumerate(x.coeffs):
        if c == 0:
            continue
        parts.append(f"{_coeff_prefix(c, first)}{atom}[{names[i]}]")
        first = False
    if not parts:
        return "0"
    return "".join(parts)


def _monomial_atoms(names, form_word, h_idx, dual_word, identity_idx) -> list[str]:
    atoms = [f"w[{i + 1}]" for i in form_word]
    if h_idx is not None and h_idx != identity_idx:
        atoms.append(f"u[{names[h_idx]}]")
    atoms.extend(f"gamma[{j + 1}]" for j in dual_word)
    return atoms


def format_cross_terms(terms, hopf, identity_idx) -> str:
    """Render ``{(a_idx, form_word, h_idx, dual_word): coeff}`` canonically.

    Terms sharing a monomial tail are grouped; the function coefficient is
    folded away when it is a scalar multiple of the unit.
    """
    names = hopf.basis_names
    atom = hopf.basis_atom
    dim = hopf.dim
    groups: dict[tuple, dict[int, Fraction]] = {}
    for (a_idx, fw, h_idx, dw), c in terms.items():
        if c == 0:
            continue
        groups.setdefault((fw, h_idx, dw), {})[a_idx] = c
    if not groups:
        return "0"

    def group_key(k):
        fw, h_idx, dw = k
        return (len(fw), fw, len(dw), dw, 0 if h_idx == identity_idx else 1 + h_idx)

    out = []
    first = True
    for fw, h_idx, dw in sorted(groups, key=group_key):
        coeffs = groups[(fw, h_idx, dw)]
        atoms = _monomial_atoms(names, fw, h_idx, dw, identity_idx)
        # scalar * unit folds into a bare coefficient on the monomial tail
        unit_scale = None
        if len(coeffs) == dim:
            vals = set(coeffs.values())
            if len(vals) == 1:
                unit_scale = vals.pop()
        if unit_scale is not None:
            if not atoms:
                atoms = [f"u[{names[identity_idx]}]"]
            out.append(f"{_coeff_prefix(unit_scale, first)}{' * '.join(atoms)}")
        elif len(coeffs) == 1:
            (a_idx, c), = coeffs.items()
            head = f"{_coeff_prefix(c, first)}{atom}[{names[a_idx]}]"
            out.append(" * ".join([head] + atoms) if atoms else head)
        else:
            inner = []
            inner_first = True
            for a_idx in sorted(coeffs):
                inner.append(f"{_coeff_prefix(coeffs[a_idx], inner_first)}{atom}[{names[a_idx]}]")
                inner_first = False
            head = f"{_coeff_prefix(Fraction(1), first)}({''.join(inner)})"
            out.append(" * ".join([head] + atoms) if atoms else head)
        first = False
    return "".join(out)
