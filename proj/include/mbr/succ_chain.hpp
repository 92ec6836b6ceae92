#pragma once

#include "mbr/broadcast.hpp"
#include "mbr/ordered_index.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace mbr {

/// One entry of succ(j): a bucket index and its Δ correction.
struct ChainEntry {
    std::size_t bucket = 0;
    Time delta = 0;

    friend bool operator==(const ChainEntry&, const ChainEntry&) = default;
};

/// State right after the transition into configuration j.
/// `hat` is h + 1 when the demoted element falls past every bucket.
struct ChainSnapshot {
    std::size_t j = 0;
    std::size_t tau = 0;       ///< bucket of element j
    std::size_t tau_next = 0;  ///< bucket of element j+1 before demotion (0 at the start)
    std::size_t hat = 0;       ///< bucket of element j+1 after demotion (0 at the start)
    std::vector<ChainEntry> succ;
};

/// How often each branch of the transition was taken.
struct StageStats {
    std::size_t transitions = 0;
    std::size_t hat_same = 0;        ///< demoted element stays in its bucket
    std::size_t hat_outside = 0;     ///< demoted element leaves every bucket
    std::size_t s2_tail_old = 0;     ///< nothing after hat; hat already listed
    std::size_t s2_tail_new = 0;     ///< nothing after hat; hat newly listed
    std::size_t s2_in_old = 0;
    std::size_t s2_in_new = 0;
    std::size_t s2_out_old = 0;
    std::size_t s2_out_new = 0;
    std::size_t s3_deleted = 0;      ///< entries dropped in total
    std::size_t s3_stopped = 0;      ///< walk stopped at a retained entry
    std::size_t s3_exhausted = 0;    ///< walk removed every candidate
    std::size_t s4_skipped = 0;      ///< pivot bucket unchanged
    std::size_t s4_empty = 0;
    std::size_t s4_alone = 0;        ///< list empty, old pivot bucket becomes the list
    std::size_t s4_in = 0;
    std::size_t s4_out = 0;
    std::size_t tail_reuse = 0;      ///< configurations past the last bucketed element
};

struct ChainHooks {
    std::function<void(const ChainSnapshot&)> observe;
    StageStats* stats = nullptr;
};

/// Broadcast times of a key list under every prefix configuration.
///
/// Element k (1-based) has key plus[k] when promoted and minus[k] otherwise;
/// plus must be nonincreasing and minus[k] <= plus[k]. Configuration j
/// promotes elements 1..j. The result holds T(j) at index j for 1 <= j <= m
/// (index 0 unused), where T is max_k (k*rho + key_k) over the sorted keys.
///
/// For rho > 0 the bucket array of the current configuration is evolved from
/// j = h' down to 1, h' being the last element inside a bucket when all are
/// promoted. The dominance chain succ(j) of nonempty buckets after the pivot
/// bucket lives in an OrderedIndex together with per-entry Δ values.
inline std::vector<Time> evolve_times(std::span<const Time> plus_in, std::span<const Time> minus_in,
                                      Weight rho, const ChainHooks* hooks = nullptr) {
    const std::size_t m = plus_in.size();
    if (m == 0 || minus_in.size() != m) {
        throw Error(Errc::InvariantViolation, "key lists must be nonempty and equally long");
    }
    for (std::size_t k = 0; k < m; ++k) {
        if ((k > 0 && plus_in[k] > plus_in[k - 1]) || minus_in[k] > plus_in[k]) {
            throw Error(Errc::InvariantViolation, "promoted keys must be sorted and dominate demoted keys");
        }
    }
    std::vector<Time> out(m + 1, 0);

    if (rho == 0) {
        std::vector<Time> suf(m + 2, std::numeric_limits<Time>::min());
        for (std::size_t k = m; k >= 1; --k) suf[k] = std::max(suf[k + 1], minus_in[k - 1]);
        for (std::size_t j = 1; j <= m; ++j) out[j] = std::max(plus_in[0], suf[j + 1]);
        return out;
    }

    // 1-based copies
    std::vector<Time> P(m + 1), M(m + 1);
    std::copy(plus_in.begin(), plus_in.end(), P.begin() + 1);
    std::copy(minus_in.begin(), minus_in.end(), M.begin() + 1);
    const std::size_t OUT = m + 1;
    const Time anchor = P[1];
    auto bucket = [&](Time key) {
        auto l = bucket_of(anchor, key, rho, m);
        return l == 0 ? OUT : l;
    };

    constexpr Time inf = std::numeric_limits<Time>::max();
    constexpr Time none = std::numeric_limits<Time>::min();
    std::vector<std::size_t> bH(m + 1);
    std::size_t hp = 0;
    std::vector<std::size_t> cntH(m + 2, 0);
    std::vector<Time> minH(m + 2, inf);
    for (std::size_t k = 1; k <= m; ++k) {
        bH[k] = bucket(P[k]);
        if (bH[k] == OUT) continue;
        hp = k;
        ++cntH[bH[k]];
        minH[bH[k]] = P[k];
    }
    std::vector<std::size_t> accH(m + 2, 0);
    std::vector<Time> preH(m + 2, none);
    for (std::size_t l = 1; l <= m; ++l) {
        accH[l] = accH[l - 1] + cntH[l];
        Time v = cntH[l] ? minH[l] + static_cast<Time>(accH[l]) * rho : none;
        preH[l] = std::max(preH[l - 1], v);
    }

    std::vector<std::size_t> cnt = cntH;
    std::vector<Time> minus_min(m + 2, inf);
    std::vector<Time> D(m + 2, 0);
    OrderedIndex idx(m);
    StageStats* st = hooks ? hooks->stats : nullptr;

    auto value = [&](std::size_t j) {
        std::size_t tau = bH[j];
        Time best = tau > 1 ? preH[tau - 1] : none;
        Time acc_tau = static_cast<Time>(accH[tau - 1] + cnt[tau]);
        best = std::max(best, std::min(P[j], minus_min[tau]) + acc_tau * rho);
        if (auto f = idx.min()) {
            Time acc_f = acc_tau + static_cast<Time>(accH[*f]) - static_cast<Time>(accH[tau]) + D[*f];
            best = std::max(best, minus_min[*f] + acc_f * rho);
        }
        return std::max<Time>(best, 0);
    };
    auto snapshot = [&](std::size_t j, std::size_t tp, std::size_t hat) {
        if (!hooks || !hooks->observe) return;
        ChainSnapshot s{j, bH[j], tp, hat, {}};
        for (auto c = idx.min(); c; c = *c < m ? idx.successor(*c) : std::nullopt) {
            s.succ.push_back({static_cast<std::size_t>(*c), D[*c]});
        }
        hooks->observe(s);
    };
    // key term used by every dominance test: min_v(l) + acc_H(l) * rho
    auto score = [&](std::size_t l) { return minus_min[l] + static_cast<Time>(accH[l]) * rho; };

    out[hp] = value(hp);
    snapshot(hp, 0, 0);
    for (std::size_t j = hp + 1; j <= m; ++j) {
        out[j] = out[hp];
        if (st) ++st->tail_reuse;
    }

    for (std::size_t j = hp - 1; j >= 1; --j) {
        const std::size_t tp = bH[j + 1];
        const std::size_t tj = bH[j];
        const std::size_t hat = bucket(M[j + 1]);
        if (st) ++st->transitions;

        --cnt[tp];
        if (hat != OUT) {
            ++cnt[hat];
            minus_min[hat] = std::min(minus_min[hat], M[j + 1]);
        }
        auto before = [&](std::size_t l) -> std::size_t {
            auto p = idx.predecessor(l);
            return p ? static_cast<std::size_t>(*p) : tp;
        };

        if (hat == tp) {
            if (st) ++st->hat_same;
        } else if (hat == OUT) {
            // every bucket from tp on loses one element: relative order is kept
            if (st) ++st->hat_outside;
        } else {
            // Stage 1: entries past hat are kept as they are.
            const bool was_listed = idx.contains(hat);
            const std::size_t b = before(hat);
            const auto f1 = hat < m ? idx.successor(hat) : std::nullopt;
            const Time fresh = 1 - (static_cast<Time>(accH[hat]) - static_cast<Time>(accH[b]));

            // Stage 2: the bucket that received the demoted element.
            std::size_t F;
            if (!f1) {
                D[hat] = was_listed ? 1 + D[hat] : fresh;
                idx.insert(hat);
                F = hat;
                if (st) ++(was_listed ? st->s2_tail_old : st->s2_tail_new);
            } else {
                const auto f = static_cast<std::size_t>(*f1);
                const std::size_t p = was_listed ? hat : b;
                const bool in = minus_min[hat] + static_cast<Time>(accH[p]) * rho >=
                                score(f) + D[f] * rho;
                if (in) {
                    D[f] += static_cast<Time>(accH[hat]) - static_cast<Time>(accH[p]);
                    D[hat] = was_listed ? 1 + D[hat] : fresh;
                    idx.insert(hat);
                    F = hat;
                    if (st) ++(was_listed ? st->s2_in_old : st->s2_in_new);
                } else {
                    D[f] = was_listed ? 1 + D[hat] + D[f] : 1 + D[f];
                    if (was_listed) idx.erase(hat);
                    F = f;
                    if (st) ++(was_listed ? st->s2_out_old : st->s2_out_new);
                }
            }

            // Stage 3: entries strictly between tp and hat, walked downward.
            Time nabla = D[F];
            std::size_t cur = b;
            bool stopped = false;
            while (cur != tp) {
                if (score(cur) >= nabla * rho + score(F)) {
                    stopped = true;
                    break;
                }
                nabla += D[cur];
                idx.erase(cur);
                if (st) ++st->s3_deleted;
                cur = before(cur);
            }
            D[F] = nabla;
            if (st && b != tp) ++(stopped ? st->s3_stopped : st->s3_exhausted);
        }

        // Stage 4: the previous pivot bucket may join the front of the list.
        if (tj == tp) {
            if (st) ++st->s4_skipped;
        } else {
            const Time g = static_cast<Time>(cnt[tp]) -
                           (static_cast<Time>(accH[tp]) - static_cast<Time>(accH[tj]));
            auto first = idx.min();
            if (cnt[tp] == 0) {
                if (first) D[*first] += g;
                if (st) ++st->s4_empty;
            } else if (!first) {
                idx.insert(tp);
                D[tp] = g;
                if (st) ++st->s4_alone;
            } else {
                const auto f = static_cast<std::size_t>(*first);
                if (score(tp) >= D[f] * rho + score(f)) {
                    idx.insert(tp);
                    D[tp] = g;
                    if (st) ++st->s4_in;
                } else {
                    D[f] += g;
                    if (st) ++st->s4_out;
                }
            }
        }

        out[j] = value(j);
        snapshot(j, tp, hat);
    }
    return out;
}

} // namespace mbr
