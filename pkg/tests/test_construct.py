import numpy as np
import pytest

from inv4perm import get_field
from inv4perm.construct import (NAMED, ValidationError, build_G, build_named, closed_form,
                                compute_VM, compute_W, count_v_sets, count_v_sets_with,
                                format_v_file, named_subset, parse_v_file, phi_involution,
                                phi_table, random_V, split_V0_V1, validate_V,
                                validate_V_exponents, vm_mask, w_mask)
from inv4perm.spectra import differential_spectrum
from inv4perm.verify import check_u_closure, check_w_vm_partition
from inv4perm.vfunc import is_permutation

from oracles import CONWAY_6, inverse_by_search, trace_by_sum


def test_W_examples(f6):
    w = compute_W(f6)
    assert 0 in w and 1 in w
    inv = [inverse_by_search(x, CONWAY_6) for x in range(64)]
    oracle = [x for x in range(64)
              if trace_by_sum(x, CONWAY_6) == 0 and trace_by_sum(inv[x ^ 1], CONWAY_6) == 0]
    assert w == oracle
    assert len(w) == 14


@pytest.mark.parametrize("n", [6, 8, 10, 12, 14])
def test_VM_size_and_bounds(n):
    f = get_field(n)
    vm = 2 * len(compute_VM(f))
    assert vm == int(vm_mask(f).sum()) == len(compute_W(f))
    assert 2 ** (n - 2) - 2 ** (n // 2 - 1) <= vm <= 2 ** (n - 2) + 2 ** (n // 2 - 1)


def test_VM_n6_is_seven_pairs(f6):
    pairs = compute_VM(f6)
    assert len(pairs) == 7
    exps = sorted(tuple(sorted(f6.discrete_log(e) for e in p)) for p in pairs)
    assert exps == [(3, 53), (6, 43), (12, 23), (21, 42), (24, 46), (29, 48), (33, 58)]


@pytest.mark.parametrize("n", [6, 8])
def test_V0_V1_partition_and_pair_closed(n):
    f = get_field(n)
    v0, v1 = split_V0_V1(f)
    assert not set(v0) & set(v1)
    assert sorted(v0 + v1) == sorted(e for p in compute_VM(f) for e in p)
    for part in (v0, v1):
        s = set(part)
        for x in part:
            assert f.div(x, x ^ 1) in s


def test_validate_V(f6):
    empty = validate_V(f6, [])
    assert empty.v_pairs == () and empty.u_elements == compute_W(f6)
    spec = validate_V_exponents(f6, [21, 42])
    assert spec.v_exponents() == [21, 42]
    with pytest.raises(ValidationError) as exc:
        validate_V_exponents(f6, [3])
    assert exc.value.element == f6.primitive_power(3)
    assert "partner" in str(exc.value)
    with pytest.raises(ValidationError) as exc:
        validate_V(f6, [0])
    assert exc.value.element == 0


def test_validate_rejects_odd_n():
    with pytest.raises(ValueError):
        validate_V(get_field(7), [])


def test_build_G_examples(f6):
    g = build_G(validate_V(f6, []))
    assert g(0) == 1
    for n in (6, 8):
        f = get_field(n)
        for seed in range(100):
            spec = random_V(f, seed % (len(compute_VM(f)) + 1), seed)
            assert is_permutation(build_G(spec))


def test_build_G_against_definition(f8):
    spec = random_V(f8, 10, seed=2)
    g = build_G(spec)
    u = set(spec.u_elements)
    for x in range(f8.size):
        assert g(x) == f8.inv(x) ^ (1 if x in u else 0)


def test_named_n6_spectra(f6):
    assert differential_spectrum(build_named(f6, "G3")).triple() == [2235, 1578, 219]
    assert differential_spectrum(build_named(f6, "GM")).triple() == [2301, 1446, 285]
    assert differential_spectrum(build_named(f6, "F3")).triple() == [2127, 1794, 111]


@pytest.mark.parametrize("n", [6, 8, 10])
def test_set_and_closed_form_routes_agree(n):
    f = get_field(n)
    for name in ("G1", "G2", "G3", "GM"):
        assert build_G(named_subset(f, name)) == closed_form(f, name)


def test_named_errors(f6):
    with pytest.raises(ValueError):
        build_named(f6, "G4")
    with pytest.raises(ValueError):
        build_named(get_field(4), "G1")


def test_F_functions_are_permutations(f8):
    for name in ("F1", "F2", "F3"):
        assert is_permutation(build_named(f8, name))


def test_phi(f6):
    assert phi_involution(f6, 0) == 1
    assert phi_involution(f6, 1) == 0
    for x in range(2, 64):
        assert phi_involution(f6, x) == f6.div(x, x ^ 1)
    for n in (6, 8, 10):
        f = get_field(n)
        p = phi_table(f)
        assert np.array_equal(p[p], f.elements)


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_U_phi_closed(n):
    f = get_field(n)
    for seed in range(10):
        spec = random_V(f, seed % 4, seed)
        assert check_u_closure(spec)
    for name in ("G1", "G2", "G3", "GM"):
        assert check_u_closure(named_subset(f, name))


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_W_VM_partition(n):
    f = get_field(n)
    assert check_w_vm_partition(f)
    assert not (w_mask(f) & vm_mask(f)).any()


def test_random_V(f6):
    assert random_V(f6, 0, seed=1).v_pairs == ()
    assert random_V(f6, 3, seed=9) == random_V(f6, 3, seed=9)
    full = random_V(f6, 7, seed=0)
    assert sorted(full.v_elements) == sorted(e for p in compute_VM(f6) for e in p)
    with pytest.raises(ValueError):
        random_V(f6, 8, seed=0)


def test_counts(f6):
    assert count_v_sets(f6) == 7
    assert count_v_sets_with(f6, 2) == 21
    assert sum(count_v_sets_with(f6, p) for p in range(8)) == 2 ** 7


def test_v_file_round_trip(f6):
    spec = validate_V_exponents(f6, [3, 21, 42, 53])
    text = format_v_file(spec)
    assert text == "field n=6\npair 3 53\npair 21 42\n"
    assert parse_v_file(text) == spec
    assert parse_v_file(format_v_file(spec, hex_elements=True)) == spec


def test_v_file_errors(f6):
    with pytest.raises(ValidationError):
        parse_v_file("pair 3 53\n")
    with pytest.raises(ValidationError):
        parse_v_file("field n=6\npair 3 12\n")
    with pytest.raises(ValidationError):
        parse_v_file("field n=6\ntriple 1 2 3\n")
    with pytest.raises(ValidationError):
        parse_v_file("field n=8\npair 3 53\n", f6)
