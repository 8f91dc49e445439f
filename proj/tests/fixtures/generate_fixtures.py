#!/usr/bin/env python3
# Copyright 2026 The vqechem Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the reference fixtures under tests/fixtures with PySCF.

The C++ test suite never calls PySCF; it only reads the files written here.
Run from the repository root:  python3 tests/fixtures/generate_fixtures.py
"""
import json
import os

import numpy as np
from pyscf import ao2mo, fci, gto, mcscf, scf
from pyscf.tools import fcidump

HERE = os.path.dirname(os.path.abspath(__file__))
ANGSTROM_TO_BOHR = 1.8897259886


def h2(r, unit="Angstrom"):
    return gto.M(atom=f"H 0 0 0; H 0 0 {r}", basis="sto-3g", unit=unit, verbose=0)


def rhf(mol):
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-13
    mf.kernel()
    return mf


def fci_energy(mf):
    return float(fci.FCI(mf).kernel()[0])


def h2_reference():
    out = {}
    mol = h2(1.4, unit="Bohr")
    out["ao_1p4_bohr"] = {
        "r_bohr": 1.4,
        "overlap": mol.intor("int1e_ovlp").tolist(),
        "kinetic": mol.intor("int1e_kin").tolist(),
        "nuclear": mol.intor("int1e_nuc").tolist(),
        "eri": ao2mo.restore(1, mol.intor("int2e"), 2).tolist(),
        "e_nuc": mol.energy_nuc(),
    }
    for r in (1.39, 1.4):
        mf = rhf(h2(r, unit="Bohr"))
        out[f"rhf_{r:.2f}_bohr"] = {"r_bohr": r, "e_rhf": mf.e_tot, "e_fci": fci_energy(mf)}
    scan = []
    for r in [0.5 + 0.05 * i for i in range(11)] + [0.74, 3.0]:
        mf = rhf(h2(r))
        scan.append({"r_angstrom": round(r, 4), "e_rhf": mf.e_tot, "e_fci": fci_energy(mf)})
    out["scan_angstrom"] = scan
    return out


def h3_reference():
    # Collinear H-H-H; neutral doublet FCI energies (orbital-invariant).
    pts = []
    for r1, r2 in [(0.74, 2.5), (0.93, 0.93), (0.80, 1.20)]:
        mol = gto.M(atom=f"H 0 0 0; H 0 0 {r1}; H 0 0 {r1 + r2}", basis="sto-3g",
                    charge=1, verbose=0)
        mf = rhf(mol)
        e = fci.FCI(mol, mf.mo_coeff).kernel(nelec=(2, 1))[0]
        pts.append({"r1_angstrom": r1, "r2_angstrom": r2, "e_fci": float(e)})
    return pts


def h2s_mol(r, angle_deg):
    half = np.deg2rad(angle_deg) / 2.0
    y, z = r * np.sin(half), r * np.cos(half)
    return gto.M(atom=f"S 0 0 0; H 0 {y} {z}; H 0 {-y} {z}", basis="sto-3g", verbose=0)


def h2s_fixtures():
    # 5 core orbitals (S 1s2s2p) folded into the constant; 6 orbitals, 8 electrons remain.
    refs = {}
    for tag, r in (("eq", 1.336), ("stretch", 1.60)):
        for rel in ("nonrel", "x2c"):
            mol = h2s_mol(r, 92.1)
            mf = scf.RHF(mol)
            if rel == "x2c":
                mf = mf.x2c()
            mf.conv_tol = 1e-12
            mf.kernel()
            mc = mcscf.CASCI(mf, 6, 8)
            h1, ecore = mc.get_h1eff()
            h2e = ao2mo.restore(1, mc.get_h2eff(), 6)
            name = f"h2s_sto3g_{rel}_{tag}.fcidump"
            fcidump.from_integrals(os.path.join(HERE, name), h1, h2e, 6, 8, nuc=ecore,
                                   ms=0, tol=1e-14)
            e_cas = float(mc.kernel()[0])
            refs[name] = {"r_angstrom": r, "angle_deg": 92.1, "e_rhf": mf.e_tot,
                          "e_casci_6o8e": e_cas}
    return refs


def main():
    with open(os.path.join(HERE, "h2_sto3g_reference.json"), "w") as f:
        json.dump(h2_reference(), f, indent=1)
    with open(os.path.join(HERE, "h3_reference.json"), "w") as f:
        json.dump(h3_reference(), f, indent=1)
    with open(os.path.join(HERE, "h2s_reference.json"), "w") as f:
        json.dump(h2s_fixtures(), f, indent=1)


if __name__ == "__main__":
    main()
