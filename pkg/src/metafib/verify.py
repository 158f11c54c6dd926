"""One-shot verification of every cross-module identity.

Each identity compares two independently computed objects.  ``run_all``
prints one PASS/FAIL line per identity in a fixed order and reports
whether everything held.  Depth presets: "quick" for a fast smoke pass,
"full" for the complete ranges.
"""

from __future__ import annotations

import sys

from . import codes, compositions, sequences, series, trees, words


class IdentityFailure(AssertionError):
    pass


def _need(ok, detail):
    if not ok:
        raise IdentityFailure(detail)


def _bounds(depth: str) -> dict:
    if depth == "quick":
        return {
            "shift_max": 3, "n_seq": 2000, "n_eval": 5000, "n_tree": 2000,
            "order": 256, "order_nested": 128, "nested_depth": 8,
            "word_bits": 1 << 10, "morphism_bits": 1 << 12, "word_idx": 10,
            "comp_n": 300, "comp_enum": 20, "codes_n": 9, "dom_n": 9,
            "bridge_n": 512, "stable_n": 60, "chain_n": 1 << 7,
            "counts_h": 6, "partition_h": 4, "double_h": 8,
        }
    if depth == "full":
        return {
            "shift_max": 6, "n_seq": 20000, "n_eval": 100000, "n_tree": 20000,
            "order": 4096, "order_nested": 2048, "nested_depth": 12,
            "word_bits": 1 << 14, "morphism_bits": 1 << 16, "word_idx": 16,
            "comp_n": 2000, "comp_enum": 30, "codes_n": 14, "dom_n": 12,
            "bridge_n": 4096, "stable_n": 200, "chain_n": 1 << 10,
            "counts_h": 8, "partition_h": 6, "double_h": 14,
        }
    raise ValueError(f"unknown depth {depth!r}")


def _check_steps(b):
    for s in range(b["shift_max"] + 1):
        vals = sequences.table(s).prefix(b["n_seq"])
        for n in range(1, b["n_seq"]):
            step = vals[n + 1] - vals[n]
            _need(step in (0, 1), f"a({s},{n+1}) - a({s},{n}) = {step}")


def _check_evaluators(b):
    for s in range(b["shift_max"] + 1):
        vals = sequences.table(s).prefix(b["n_eval"])
        for n in range(1, b["n_eval"] + 1):
            _need(sequences.as_via_a0(s, n) == vals[n], f"as_via_a0({s},{n})")
            _need(sequences.as_descent(s, n) == vals[n], f"as_descent({s},{n})")
    for n in range(0, b["n_eval"] + 1):
        _need(sequences.a0_fast(n) == sequences.a(0, n), f"a0_fast({n})")
    for n in range(1, b["n_eval"] + 1):
        _need(sequences.a1_fast(n) == sequences.a(1, n), f"a1_fast({n})")


def _check_tree_flags(b):
    for s in range(b["shift_max"] + 1):
        t = sequences.table(s)
        t.extend_to(b["n_tree"])
        for n in range(1, b["n_tree"] + 1):
            _need(trees.is_leaf_oracle(s, n) == t.d(n), f"leaf flag s={s} n={n}")


def _check_tree_counts(b):
    for s in range(b["shift_max"] + 1):
        vals = sequences.table(s).prefix(b["n_tree"])
        scan = trees.leaf_count_scan(s, b["n_tree"])
        _need(scan[1:] == vals[1:], f"prefix leaf counts s={s}")


def _check_first_hits(b):
    for s in range(b["shift_max"] + 1):
        t = sequences.table(s)
        top = t.a(b["n_seq"])
        for n in range(2, top + 1):
            pos = t.p(n)
            _need(t.a(pos) == n and t.a(pos - 1) == n - 1, f"p({s},{n})={pos}")


def _check_p_differences(b):
    for s in range(b["shift_max"] + 1):
        t = sequences.table(s)
        top = t.a(b["n_seq"])
        for n in range(1, top):
            gap = t.p(n + 1) - t.p(n)
            want = sequences.ruler(n) + (s if sequences.is_power_of_two(n) else 0)
            _need(gap == want, f"p gap s={s} n={n}: {gap} != {want}")


def _check_ones_count(b):
    for s in range(b["shift_max"] + 1):
        t = sequences.table(s)
        running = 0
        for n in range(1, b["n_seq"] + 1):
            running += t.d(n)
            _need(t.a(n) == running, f"ones count s={s} n={n}")


def _check_doubling(b):
    # k = 0 is excluded: with a(0,0) = 1 the identity holds only for k >= 1
    for h in range(1, b["double_h"] + 1):
        block = 1 << h
        for k in range(1, block):
            _need(
                sequences.a(0, block - 1 + k) == (block >> 1) + sequences.a(0, k),
                f"doubling h={h} k={k}",
            )


def _check_word_stream(b):
    for s in range(min(b["shift_max"], 4) + 1):
        t = sequences.table(s)
        w = words.dword_prefix(s, b["word_bits"])
        for n in range(1, b["word_bits"] + 1):
            _need(int(w[n - 1]) == t.d(n), f"stream bit s={s} n={n}")
        ones = [i + 1 for i, c in enumerate(w) if c == "1"]
        for rank, pos in enumerate(ones, 1):
            _need(t.p(rank) == pos, f"ones positions s={s} rank={rank}")


def _check_ruler_factorization(b):
    for s in range(min(b["shift_max"], 4) + 1):
        target = words.dword_prefix(s, b["word_bits"])
        # enough terms to cover the prefix: one term per leaf
        terms = sequences.a(s, b["word_bits"])
        built = words.ruler_factorization(s, terms)
        _need(built[: len(target)] == target, f"ruler factorization s={s}")


def _check_morphism(b):
    bits = b["morphism_bits"]
    _need(
        words.morphism_fixed_point(bits) == words.dword_prefix(0, bits),
        "morphism prefix differs from block concatenation",
    )


def _check_word_pair(b):
    top = b["word_idx"]
    for n in range(top + 1):
        _need(words.word_E(n)[::-1] == words.word_D(n), f"reversal n={n}")
    for n in range(top):
        e, e1 = words.word_E(n), words.word_E(n + 1)
        _need(e1.startswith(e), f"prefix chain n={n}")
    for h in range(1, top + 1):
        _need(words.word_E(h - 1).count("1") == 1 << (h - 1),
              f"ones in the length 2**{h}-1 prefix")


def _check_ruler_gf(b):
    gf = series.gf_ruler(b["order"])
    for n in range(1, b["order"] + 1):
        _need(gf.coefficient(n) == sequences.ruler(n), f"ruler gf at {n}")


def _check_d_gf(b):
    order = b["order"]
    for s in range(min(b["shift_max"], 4) + 1):
        t = sequences.table(s)
        ds = series.gf_Ds_sum(s, order)
        for n in range(1, order + 1):
            _need(ds.coefficient(n) == t.d(n), f"d gf s={s} n={n}")
        nested = series.gf_Ds_nested(s, b["order_nested"], b["nested_depth"])
        _need(
            nested == series.gf_Ds_sum(s, b["order_nested"]),
            f"nested form s={s}",
        )


def _check_a_gf(b):
    order = b["order"]
    for s in range(min(b["shift_max"], 4) + 1):
        t = sequences.table(s)
        quo = series.gf_A_from_D(s, order)
        for n in range(1, order + 1):
            _need(quo.coefficient(n) == t.a(n), f"a gf s={s} n={n}")
        if s >= 1:
            _need(series.gf_As(s, order) == quo, f"product form s={s}")


def _check_p_gf(b):
    order = b["order"]
    for s in range(min(b["shift_max"], 4) + 1):
        t = sequences.table(s)
        gf = series.gf_Ps(s, order)
        _need(gf.coefficient(0) == 1, f"p gf constant s={s}")
        for n in range(1, order + 1):
            _need(gf.coefficient(n) == t.p(n), f"p gf s={s} n={n}")


def _check_composition_counts(b):
    top = b["comp_n"]
    for s in range(1, 5):
        counted = compositions.counts_up_to(s, top)
        vals = sequences.table(s).prefix(top)
        _need(counted[1:] == vals[1:], f"composition counts s={s}")


def _check_composition_enum(b):
    for s in range(1, 4):
        for n in range(1, b["comp_enum"] + 1):
            found = compositions.enumerate_compositions(s, n)
            _need(
                len(found) == compositions.count_compositions(s, n),
                f"enumeration size s={s} n={n}",
            )
            for parts in found:
                _need(sum(parts) == n, f"sum s={s} n={n}")
                for i, x in enumerate(parts):
                    _need(
                        x in compositions.part_choices(s, i),
                        f"membership s={s} n={n} pos={i}",
                    )


def _check_codes_optimum(b):
    for n in range(2, b["codes_n"] + 1):
        for h in range(1, n):
            _need(
                codes.M(n, h) == codes.M_oracle(n, h),
                f"M({n},{h}) differs from brute force",
            )


def _check_dominance(b):
    for n in range(2, b["dom_n"] + 1):
        for h in range(codes._ceil_lg(n), n):
            greedy = codes.level_counts(codes.greedy_tree(n, h))
            for other in codes.enumerate_codes(n, h):
                tau = codes.level_counts(other)
                for j in range(h):
                    _need(
                        sum(greedy[j:]) >= sum(tau[j:]),
                        f"dominance n={n} h={h} j={j} vs {other}",
                    )


def _check_bridge_amax(b):
    for n in range(2, b["bridge_n"] + 1):
        _need(codes.a_max(n) == sequences.a(1, n - 1), f"a_max({n})")


def _check_bridge_bseq(b):
    for n in range(1, b["bridge_n"] + 1):
        _need(codes.b_seq(n) == sequences.a(0, n), f"b_seq({n})")


def _check_height_stability(b):
    for n in range(1, b["stable_n"] + 1):
        h = 1
        while n + h > 1 << h:
            h += 1
        base = codes.M(n + h, h)
        for k in range(h, h + 5):
            _need(codes.M(n + k, k) == base, f"stability n={n} k={k}")


def _check_kraft(b):
    for n in range(2, b["codes_n"] + 1):
        for h in range(codes._ceil_lg(n), n):
            if h + 1 <= n <= 1 << h:
                codes.validate_code(codes.greedy_tree(n, h))
    for n in range(2, b["chain_n"] + 1):
        codes.validate_code(codes.greedy_tree_unbounded(n))


def _check_shrink(b):
    for n in range(3, b["chain_n"] + 1):
        grown = codes.greedy_tree_unbounded(n)
        small = codes.shrink(grown)
        if sequences.is_power_of_two(n - 1) and n - 1 > 2:
            # the height drops at these boundaries; re-grow instead
            relist = list(small)
            codes._expand_leftmost(relist, relist[0])
            _need(tuple(relist) == grown, f"regrow n={n}")
        else:
            _need(
                small == codes.greedy_tree_unbounded(n - 1),
                f"shrink n={n}",
            )


def _check_counts_roundtrip(b):
    h_top = b["counts_h"]
    leaf_cap = 14  # keeps n = sum(tau) + 1 within the enumeration guard

    def grow(tau, h):
        if sum(tau) + 1 > leaf_cap:
            return
        if len(tau) == h:
            code = codes.counts_to_code(tau)
            _need(codes.level_counts(code) == tau, f"roundtrip {tau}")
            return
        for nxt in range(1, 2 * tau[-1] + 1):
            grow(tau + [nxt], h)

    for h in range(1, h_top + 1):
        grow([1], h)


def _check_partition_ones(b):
    for h in range(1, b["partition_h"] + 1):
        for n in range(2, min((1 << h) + 2, 15)):
            brute = codes.max_ones_partition_brute(n, h)
            _need(
                brute == 2 * codes.max_ones_partition(n, h),
                f"partition ones n={n} h={h}: {brute}",
            )


IDENTITIES = [
    ("a increments by 0 or 1", _check_steps),
    ("closed-form evaluators match the recurrence", _check_evaluators),
    ("tree oracle leaf flags equal d", _check_tree_flags),
    ("tree oracle leaf counts equal a", _check_tree_counts),
    ("p marks the first occurrence in a", _check_first_hits),
    ("p differences: ruler plus shift at powers of two", _check_p_differences),
    ("a equals the count of leaf flags", _check_ones_count),
    ("shift-0 doubling identity", _check_doubling),
    ("word blocks rebuild the leaf stream", _check_word_stream),
    ("run-length factorization rebuilds the leaf stream", _check_ruler_factorization),
    ("morphism fixed point equals the shift-0 stream", _check_morphism),
    ("reversal ties the two word families", _check_word_pair),
    ("ruler generating function coefficients", _check_ruler_gf),
    ("leaf-stream generating functions (sum and nested)", _check_d_gf),
    ("leaf-count generating functions (quotient and product)", _check_a_gf),
    ("leaf-position generating function", _check_p_gf),
    ("composition counts equal the leaf counts", _check_composition_counts),
    ("composition enumeration matches the counts", _check_composition_enum),
    ("greedy optimum equals the exhaustive optimum", _check_codes_optimum),
    ("greedy level counts dominate every code", _check_dominance),
    ("peak pair count equals the shift-1 sequence", _check_bridge_amax),
    ("fixed-slack pair count equals the shift-0 sequence", _check_bridge_bseq),
    ("deepest-level optimum is stable under extra height", _check_height_stability),
    ("constructed codes satisfy exact Kraft equality", _check_kraft),
    ("shrink inverts greedy growth", _check_shrink),
    ("level counts round-trip through codes", _check_counts_roundtrip),
    ("partition ones equal twice the pair optimum", _check_partition_ones),
]


def run_all(depth: str = "quick", stream=None) -> bool:
    """Run every identity at the given depth; True iff all pass."""
    out = stream if stream is not None else sys.stdout
    bounds = _bounds(depth)
    all_ok = True
    for name, check in IDENTITIES:
        try:
            check(bounds)
        except IdentityFailure as exc:
            all_ok = False
            out.write(f"FAIL  {name}: {exc}\n")
        except Exception as exc:  # a blown-up check is still a failure
            all_ok = False
            out.write(f"FAIL  {name}: crashed: {exc!r}\n")
        else:
            out.write(f"PASS  {name}\n")
    return all_ok
