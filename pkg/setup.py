from setuptools import setup, find_packages

setup(
    name="swarm-sqp",
    version="0.1.0",
    packages=find_packages(where = "src"),
    package_dir={"": "src"},
    python_requires=">=3.9",
    install_requires=[
        "numpy",
        "pandas",
        "pyyaml",
        "jinja2",
    ],
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
entry_points={
            "console_scripts": [
                "swarm_sqp=swarm_sqp.cli:main",
            ],
    },
    author="Dan Levy",
    author_email="levy@cshl.edu",
    description="Multi-swarm PSO with SQP refinement for constrained benchmark problems",
)
