"""Truncations of the partial basis complex in ranks 2 and 3."""

from pbcomplex.verify import verify_b3_probe, verify_farey

for L in (1, 2, 4, 8):
    rep = verify_farey(L)
    print(f"rank 2, length <= {L}: {rep.observations}  {'ok' if rep.passed else 'MISMATCH'}")

for L in (1, 2):
    rep = verify_b3_probe(L)
    o = rep.observations
    print(f"rank 3, length <= {L}: f={o['f_vector']} components={o['components']} H1={o['H1']}"
          f" H~={o['reduced_homology']}")
