"""Shared numeric helpers for the tests, kept independent of library internals."""

import numpy as np

SQ2 = 1.0 / np.sqrt(2.0)

KET_UU = np.array([1, 0, 0, 0], dtype=complex)
KET_UD = np.array([0, 1, 0, 0], dtype=complex)
KET_DU = np.array([0, 0, 1, 0], dtype=complex)
KET_DD = np.array([0, 0, 0, 1], dtype=complex)
KET_SINGLET = (KET_UD - KET_DU) * SQ2
KET_BELL_PHI_PLUS = (KET_UU + KET_DD) * SQ2


def projector(ket):
    return np.outer(ket, ket.conj())


SINGLET = projector(KET_SINGLET)


def werner(fidelity):
    return fidelity * SINGLET + (1.0 - fidelity) * (np.eye(4) - SINGLET) / 3.0


def rand_hermitian(rng, scale=1.0):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    return scale * (a + a.conj().T)


def rand_density(rng):
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def rand_pure_ket(rng):
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    return v / np.linalg.norm(v)


def rand_unitary2(rng):
    z = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) * SQ2
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def ppt_min_eigenvalue(rho):
    """Smallest eigenvalue of the partial transpose over site B.

    For two qubits, negativity of this eigenvalue is equivalent to
    entanglement, which makes it an oracle fully independent of the
    concurrence pipeline.
    """
    r = np.asarray(rho).reshape(2, 2, 2, 2)
    pt = r.transpose(0, 3, 2, 1).reshape(4, 4)
    return float(np.linalg.eigvalsh(pt)[0])
