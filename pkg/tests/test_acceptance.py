"""Acceptance suite: one test per criterion, one pass/fail line each."""

import pytest

from qgamma import verify


def _check(result):
    line = f'criterion {result["id"]:2d} [{result["name"]}]: ' \
           f'{"PASS" if result["passed"] else "FAIL"}'
    print(line)
    assert result["passed"], f'{line}  details: {result["details"]}'


def test_criterion_01_property_o_and_spectra():
    _check(verify.criterion_1())


def test_criterion_02_fundamental_solution_oracle():
    _check(verify.criterion_2())


def test_criterion_03_gamma_conjecture_limit():
    _check(verify.criterion_3())


def test_criterion_04_gram_equals_euler_pairing():
    _check(verify.criterion_4())


def test_criterion_05_satake_wedge_identity():
    _check(verify.criterion_5())


def test_criterion_06_mellin_solution():
    _check(verify.criterion_6())


def test_criterion_07_apery_limit():
    _check(verify.criterion_7())


def test_criterion_08_quantum_period_radius():
    _check(verify.criterion_8())


def test_criterion_09_mutation_suite():
    _check(verify.criterion_9())


def test_criterion_10_zeta_regularization():
    _check(verify.criterion_10())


def test_criterion_11_mrs_wedge():
    _check(verify.criterion_11())
