from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

sources = [
    "bindings/jfrac_py.cpp",
    "src/xpoly.cpp",
    "src/zpoly.cpp",
    "src/jfraction.cpp",
    "src/variants.cpp",
    "src/identities.cpp",
    "src/congruences.cpp",
    "src/oracle.cpp",
    "src/serialize.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "jfrac._jfrac",
            sources,
            include_dirs=["include", "vendor"],
            libraries=["gmpxx", "gmp"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
