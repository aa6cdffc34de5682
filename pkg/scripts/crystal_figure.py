"""Write the crystal graph on RP(w) as DOT, one cluster per component,
with the highest weight vertex's lambda, pi and a in the cluster label.

    python3 scripts/crystal_figure.py 21543 -o crystal.dot && dot -Tpdf crystal.dot -o crystal.pdf
"""

import argparse

from pdcrystal.keylab import TRUNCATIONS, decompose_schubert
from pdcrystal.perm import Permutation, reduced_expression, word_to_text
from pdcrystal.crystal import lower
from pdcrystal.pipedream import weight


def q(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def to_dot(w, truncation):
    report = decompose_schubert(w, check=False, truncation=truncation)
    lines = ["digraph crystal {", "  rankdir=TB;", f"  label={q('RP(' + str(w) + ')')};"]
    for k, c in enumerate(report.components):
        label = f"lambda={c.lam} pi={word_to_text(reduced_expression(c.pi))} a={c.a}"
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f"    label={q(label)};")
        for D in c.members:
            style = ", penwidth=2" if D == c.highest else ""
            text = D.ascii() + "\nwt=" + "".join(map(str, weight(D)))
            lines.append(f"    {q(D.key_text())} [shape=box, fontname=monospace, label={q(text)}{style}];")
        lines.append("  }")
        for D in c.members:
            for i in range(1, w.n):
                E = lower(D, i)
                if E is not None:
                    lines.append(f"  {q(D.key_text())} -> {q(E.key_text())} [label={i}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("perm")
    ap.add_argument("-o", "--out", default=None)
    ap.add_argument("--truncation", choices=TRUNCATIONS, default="crystal")
    args = ap.parse_args()
    dot = to_dot(Permutation.parse(args.perm), args.truncation)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
    else:
        print(dot, end="")


if __name__ == "__main__":
    main()
