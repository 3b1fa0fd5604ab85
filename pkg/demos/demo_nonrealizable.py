"""A valid phirotope that no complex matrix realizes.

Rank-2 phased matroids look deceptively simple: every rank-2 oriented
matroid is realizable.  Their phased cousins are not.  This script builds a
rank-2 phirotope on five elements that satisfies every Grassmann-Pluecker
relation, reconstructs the only matrix that could possibly realize it, and
watches the final minor refuse to cooperate.
"""

from phasedmatroids import NotRealizable, Phase, Phirotope, decide_realizability

values = {
    (1, 2): 0.0, (1, 3): 0.0, (1, 4): 0.0, (1, 5): 0.0,
    (2, 3): 1.0, (2, 4): 1.5, (2, 5): 4 / 3,
    (3, 4): 1.75, (3, 5): 5 / 3, (4, 5): 5 / 6,
}
phi = Phirotope(5, 2, {b: Phase.from_angle_over_pi(x) for b, x in values.items()})

print("Grassmann-Pluecker violations:", phi.check_gp() or "none")

verdict = decide_realizability(phi)
assert isinstance(verdict, NotRealizable)

print("\nThe values on all pairs except {4,5} force this candidate matrix:")
for i in range(1, 3):
    row = []
    for j in range(1, 6):
        norm = verdict.matrix.entry_norm(i, j)
        p = verdict.matrix.entry_phase(i, j)
        row.append("0" if norm == 0 else f"{norm:.3g}*e^(i{p.angle_over_pi:.4g}pi)")
    print("  [" + ", ".join(row) + "]")

w = verdict.witness
print(f"\nBut the minor on columns {set(w.basis)} disagrees:")
print(f"  phirotope value:  e^(i{w.expected.angle_over_pi:.6g}pi)")
print(f"  matrix minor:     e^(i{w.computed.angle_over_pi:.6g}pi)")
print("\nNo realization exists; the verdict is NotRealizable.")
