from setuptools import setup, find_packages

with open('requirements/common.txt', 'r') as f:
    requirements = f.read().splitlines()

setup(
    name='algunknot',
    version='0.1.0',
    license='MIT',
    description=(
        'Certified bounds on algebraic unknotting invariants '
        'of knots and 2-knots'
    ),
    packages=find_packages(exclude=['tests', 'tests.*']),
    setup_requires=['setuptools_scm'],
    include_package_data=True,
    package_data={'algunknot': ['data/*.json']},
    zip_safe=False,
    install_requires=requirements,
    scripts=['bin/algunknot'],
)
