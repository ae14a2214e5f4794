"""Smoke test for the cmreg extension module."""

import cmreg

S = cmreg.Ring("QQ", 3)
assert S.nvars == 3 and S.characteristic == 0

# Twisted cubic: reg(S/I) = 1, Betti numbers 1, 3, 2.
b = S.betti(["x1^2 - x0*x2", "x1*x2 - x0*x0", "x2^2 - x0*x1"])
print("betti", b)

r = S.regularity(["x0^2", "x1^2", "x2^2"])
assert r == 3, r
a = S.a_invariants(["x0^2", "x0*x1"])
print("a-invariants", a)
assert a["reg"] == 1, a

hf = S.hilbert(["x0", "x1"], 0, 4)
assert hf == [1, 1, 1, 1, 1], hf

sat = S.saturation(["x0^2", "x0*x1", "x0*x2"])
assert sat == ["x0"], sat

T = cmreg.Ring("GF(5)", 3, ["x0^2 + x1^2 + x2^2"])
t = T.tor([["x0", "x1"], ["x2"]], 1, 0, 4)
print("tor", t)

code, records, summary = cmreg.run_session(
    "ring R = poly(QQ, 2); ideal I = (x0^2, x0*x1); module M = R/I; cmd betti M;"
)
assert code == 0 and records[0]["command"] == "betti", records
try:
    cmreg.run_session("ring R = poly(GF(4), 2);")
except ValueError as e:
    print("parse error:", e)
else:
    raise AssertionError("expected ValueError")
print("ok")
