from Cython.Build import cythonize
from setuptools import Extension, setup

# -ffp-contract=off keeps the compiled kernels bit-identical to the
# pure-Python twin (no FMA contraction of a*b+c expressions).
extensions = [
    Extension(
        "heatcap._kernels",
        ["src/heatcap/_kernels.pyx"],
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
