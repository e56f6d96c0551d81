"""Spectra of the generated families against their closed forms, plus the
sign counts about 0 and -2."""
from mixedspec.families import FamilySpec, generate
from mixedspec.spectra import family_spectrum_closed_form, spectra_agree, spectrum

for family, params in [("KM", (4,)), ("KD", (4,)), ("KMP", (2, 2, 2)), ("KDP", (3, 3)),
                       ("OPS", (5,)), ("OPA", (5,)), ("OCS", (6,)), ("OCA", (6,))]:
    spec = FamilySpec.of(family, *params)
    sp = spectrum(generate(spec))
    closed = family_spectrum_closed_form(spec)
    shown = ", ".join(f"{v:.4g}^{k}" for v, k in closed)
    print(f"{family:<4}{str(params):<11} {shown:<40} agree={spectra_agree(closed, sp.eigenvalues)}"
          f"  about 0: {sp.sign_counts}  about -2: {sp.shifted_counts}")
