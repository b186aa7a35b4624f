"""Regenerates the CSV fixtures from closed-form expressions."""
import cmath
import math
from pathlib import Path

HERE = Path(__file__).resolve().parent


def write(name, start, step, count, fn):
    with open(HERE / name, "w") as out:
        out.write("t,re,im\n")
        for i in range(count):
            t = start + step * i
            z = complex(fn(t))
            out.write(f"{t!r},{z.real!r},{z.imag!r}\n")


# exp(-t^2/2) on [-8, 8] and its Fourier-case transform exp(-i pi/4) exp(-u^2/2) on [-6, 6].
write("gaussian.csv", -8.0, 1 / 64, 1025, lambda t: math.exp(-t * t / 2))
write("gaussian_fourier.csv", -6.0, 1 / 32, 385, lambda u: cmath.exp(-1j * math.pi / 4) * math.exp(-u * u / 2))

# Indicator of [-1, 1] and its self-convolution 2 - |t| on [-2, 2].
write("box.csv", -1.0, 1 / 16, 33, lambda t: 1.0)
write("triangle.csv", -2.0, 1 / 16, 65, lambda t: 2.0 - abs(t))
write("zero.csv", -1.0, 1 / 16, 33, lambda t: 0.0)
