from setuptools import setup

setup(
    name="mzv-ohno-utilities",
    version="1.0.0",
    description="Ohno-type relations for multiple zeta(-star) values and their finite analogues",
    license="MIT",
    packages=["mzv_utilities", "mzv_utilities.command_line"],
    install_requires=[
        "pandas",
        "pyyaml",
        "numpy",
    ],
    entry_points={
        "console_scripts": [
            "mzv-ohno=mzv_utilities.command_line.mzv_ohno:main",
        ]
    },
    zip_safe=False,
)
