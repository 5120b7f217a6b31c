"""Independent sympy oracle used to freeze expected values for the C++ tests.

Run: python3 tests/oracle/cas_oracle.py
"""
import sympy as sp

x, y, z, s, t = sp.symbols("x y z s t")
X = (x, y, z)


def hess(F):
    return sp.Matrix(3, 3, lambda i, j: sp.diff(F, X[i], X[j]))


def hessian2(F, kappa):
    d = sp.Poly(F, *X).total_degree()
    M = hess(F)
    H = sp.expand(M.det())
    MH = hess(H)
    adj = M.adjugate()

    def sym6(A):
        return [A[0, 0], A[1, 1], A[2, 2], A[1, 2], A[0, 2], A[0, 1]]

    A6 = sym6(adj)
    H6 = sym6(MH)
    w = [1, 1, 1, 2, 2, 2]
    om_h = [sp.expand(sum(sp.diff(A6[k], v) * w[k] * H6[k] for k in range(6))) for v in X]
    om_f = [sp.expand(sum(A6[k] * w[k] * sp.diff(H6[k], v) for k in range(6))) for v in X]
    gH = [sp.diff(H, v) for v in X]
    g6 = [gH[0] ** 2, gH[1] ** 2, gH[2] ** 2, gH[1] * gH[2], gH[0] * gH[2], gH[0] * gH[1]]
    Psi = sp.expand(sum(A6[k] * w[k] * g6[k] for k in range(6)))
    gF = [sp.diff(F, v) for v in X]

    def jac(row):
        return sp.Matrix([gF, gH, row]).det()

    J1 = jac(om_h)
    J2 = jac(om_f)
    J3 = jac([sp.diff(Psi, v) for v in X])
    return sp.expand((12 * d**2 - 54 * d + 57) * H * J1 + (d - 2) * (12 * d - 27) * H * J2
                     - kappa * (d - 2) ** 2 * J3), H


def xi(phi):
    V = [phi[0] ** 2, phi[1] ** 2, phi[2] ** 2, phi[1] * phi[2], phi[0] * phi[2], phi[0] * phi[1]]
    rows = []
    for j in range(6):
        rows.append([sp.diff(v, s, 5 - j, t, j) if j else sp.diff(v, s, 5) for v in V])
    return sp.factor(sp.Matrix(rows).det())


def omega(phi):
    V = [phi[0] ** 2, phi[1] ** 2, phi[2] ** 2, phi[1] * phi[2], phi[0] * phi[2], phi[0] * phi[1]]
    basis = [x**2, y**2, z**2, y * z, x * z, x * y]
    rows = [basis]
    for j in range(5):
        rows.append([sp.diff(v, s, 4 - j, t, j) if 0 < j < 4 else (sp.diff(v, s, 4) if j == 0 else sp.diff(v, t, 4)) for v in V])
    return sp.expand(sp.Matrix(rows).det())


if __name__ == "__main__":
    F = y**2 * z - x**3 - x**2 * z
    print("H(nodal cubic) =", sp.expand(hess(F).det()))
    print("H(fermat) =", sp.expand(hess(x**3 + y**3 + z**3).det()))
    Fq = x**4 - x**3 * y + y**3 * z
    H2, Hq = hessian2(Fq, 20)
    print("H2(quartic, 20) =", sp.factor(H2))
    H2c, _ = hessian2(Fq, 40)
    print("H2(quartic, 40) =", sp.factor(H2c))
    phq = (s * t**3, t**4, s**3 * t - s**4)
    sub = {x: phq[0], y: phq[1], z: phq[2]}
    print("H o phi =", sp.factor(sp.expand(Hq.subs(sub, simultaneous=True))))
    print("H2 o phi =", sp.factor(sp.expand(H2.subs(sub, simultaneous=True))))
    print("H2_1865 o phi =", sp.factor(sp.expand(H2c.subs(sub, simultaneous=True))))
    print("xi(ex45) =", xi((s**5, s**3 * t**2, s * t**4 + t**5)))
    print("xi(ex46) =", xi((s**5, s**3 * t**2, t**5)))
    om = omega((s * t**2 - s**3, t**3 - s**2 * t, s**3))
    P = sp.Poly(om, x, y, z)
    for mono in [(2, 0, 0), (0, 2, 0), (0, 0, 2), (0, 1, 1), (1, 0, 1), (1, 1, 0)]:
        print("omega coeff", mono, sp.factor(P.coeff_monomial(mono)))


def osculating(F, p):
    M = hess(F)
    H = sp.expand(M.det())
    adj = M.adjugate()
    MH = hess(H)
    Om = sp.expand((adj * MH).trace())
    gH = sp.Matrix([sp.diff(H, v) for v in X])
    Psi = sp.expand((gH.T * adj * gH)[0])
    sub = dict(zip(X, p))
    Hp = H.subs(sub)
    Lam = (-3 * Om.subs(sub) * Hp + 4 * Psi.subs(sub)) / (9 * Hp**3)
    DF = sum(v * sp.diff(F, v).subs(sub) for v in X)
    DH = sum(v * sp.diff(H, v).subs(sub) for v in X)
    D2F = sum(X[i] * X[j] * M[i, j].subs(sub) for i in range(3) for j in range(3))
    return sp.factor(sp.expand(D2F - (sp.Rational(2, 3) * DH / Hp + Lam * DF) * DF))


if __name__ == "__main__":
    print("O_p nodal (-1:0:1) =", osculating(y**2 * z - x**3 - x**2 * z, (-1, 0, 1)))
    print("O_p quartic p2 =", osculating(x**4 - x**3 * y + y**3 * z, (sp.Rational(64, 3), sp.Rational(256, 3), 1)))
    print("O_p quartic (1:1:-)")
