import os
import subprocess

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup


def eigen_include() -> str:
    try:
        flags = subprocess.run(
            ["pkg-config", "--cflags-only-I", "eigen3"],
            capture_output=True, text=True, check=True,
        ).stdout.split()
        for flag in flags:
            if flag.startswith("-I"):
                return flag[2:]
    except (OSError, subprocess.CalledProcessError):
        pass
    return "/usr/include/eigen3"


here = os.path.dirname(os.path.abspath(__file__))

ext = Pybind11Extension(
    "lsekit._core",
    sources=sorted(
        os.path.join("src", f)
        for f in os.listdir(os.path.join(here, "src"))
        if f.endswith(".cpp")
    )
    + ["bindings/module.cpp"],
    include_dirs=[
        os.path.join(here, "include"),
        os.path.join(here, "vendor"),
        eigen_include(),
    ],
    cxx_std=20,
    define_macros=[("VERSION_INFO", "0.1.0")],
)

setup(
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
