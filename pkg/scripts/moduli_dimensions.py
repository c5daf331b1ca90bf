#!/usr/bin/env python3
"""Orbifold Euler pairings and moduli dimensions of the built-in classes.

Tabulates <v~^2> and dim = 2 - <v~^2> for O_X, O_p and TX over the trivial
model and every cyclic preset, all in exact arithmetic.
"""

from orbk3.hrr import BUILTIN_CLASSES, euler_pairing
from orbk3.inertia import preset_cyclic, trivial_model


def main():
    models = [("trivial", trivial_model())] + [
        (f"cyclic:{n}", preset_cyclic(n)) for n in range(2, 9)
    ]
    names = sorted(BUILTIN_CLASSES)
    header = "model      " + "".join(f"{name:>16}" for name in names)
    print(header)
    for label, model in models:
        cells = []
        for name in names:
            cls = BUILTIN_CLASSES[name](model)
            pairing = euler_pairing(model, cls, cls)
            cells.append(f"{str(pairing):>7}/{str(2 - pairing):<8}")
        print(f"{label:<11}" + "".join(cells))
    print("(each cell is <v~^2> / dim)")


if __name__ == "__main__":
    main()
