"""Regenerate the bundled STO-3G FCIDUMP fixtures.

Requires PySCF. Writes one FCIDUMP per (molecule, distance) into
crates/core/fixtures/fcidump/. Convert them to pauli_text with

    cargo run --release --example convert_fixtures
"""

import os
import sys

import numpy as np
from pyscf import gto, mcscf, scf
from pyscf.tools import fcidump

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "fixtures", "fcidump")
DISTANCES = [round(0.2 + 0.025 * i, 3) for i in range(72)]  # 0.200 .. 1.975
EXTRA = {"h2": [0.735]}  # equilibrium geometry

MOLECULES = {
    # name: (atom template, charge, active space or None)
    "h2": ("H 0 0 0; H 0 0 {d}", 0, None),
    "heh+": ("He 0 0 0; H 0 0 {d}", 1, None),
    "he2": ("He 0 0 0; He 0 0 {d}", 0, None),
    "as-lih": ("Li 0 0 0; H 0 0 {d}", 0, (2, 2)),
}


def write(name, d):
    atom, charge, cas = MOLECULES[name]
    mol = gto.M(atom=atom.format(d=d), basis="sto-3g", charge=charge, unit="Angstrom", verbose=0)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    path = os.path.join(OUT, f"{name}_{d:.3f}.fcidump")
    if cas is None:
        fcidump.from_scf(mf, path, tol=1e-14)
    else:
        ncas, nelecas = cas
        mc = mcscf.CASCI(mf, ncas, nelecas)
        h1, ecore = mc.get_h1eff()
        h2 = mc.get_h2eff()
        fcidump.from_integrals(path, h1, h2, ncas, nelecas, nuc=ecore, ms=0, tol=1e-14)


def main():
    os.makedirs(OUT, exist_ok=True)
    names = sys.argv[1:] or list(MOLECULES)
    for name in names:
        for d in DISTANCES + EXTRA.get(name, []):
            write(name, d)


if __name__ == "__main__":
    np.set_printoptions(precision=12)
    main()
