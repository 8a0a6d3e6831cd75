"""Shared ASCII rendering of integer-coefficient monomial sums.

The output uses explicit '*' between factors and '^' for powers, so every
printed form re-parses under the expression grammar of the CLI.
"""


def format_sum(terms):
    """Render ``[(coeff, monomial_str), ...]`` as ``a*m1 + b*m2 - ...``.

    ``terms`` must already be in the desired order; coefficients are nonzero
    integers and ``monomial_str`` is '' for the constant term.
    """
    parts = []
    for coeff, mono in terms:
        mag = abs(coeff)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if not parts:
            parts.append("-" + body if coeff < 0 else body)
        else:
            parts.append((" - " if coeff < 0 else " + ") + body)
    return "".join(parts) if parts else "0"
