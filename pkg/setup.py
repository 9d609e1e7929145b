import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

# The compiled kernel is optional: if the build fails the package falls
# back to the pure-numpy implementation selected in splitoct._kernels.
extensions = [
    Extension(
        "splitoct._kernels._cykernels",
        ["src/splitoct/_kernels/_cykernels.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
