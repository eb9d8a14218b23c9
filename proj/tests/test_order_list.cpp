#include "support.hpp"
#include "triepal/error.hpp"
#include "triepal/order_list.hpp"
#include "triepal/oracles.hpp"

#include <doctest.h>

#include <deque>
#include <map>
#include <random>

using namespace triepal;
using namespace triepal::testing;

TEST_SUITE("order_list") {

TEST_CASE("front insertion on an empty list") {
    OrderList l;
    ElemId x = l.insert_after(kFront);
    CHECK(l.size() == 1);
    CHECK(l.to_vector() == std::vector<ElemId>{x});
    ElemId y = l.insert_after(x);
    CHECK(l.less(x, y));
    CHECK(l.next(x) == y);
    CHECK(l.prev(y) == x);
    CHECK_FALSE(l.prev(x).has_value());
}

TEST_CASE("pred and succ are strict") {
    OrderList l;
    ElemId x = l.insert_after(kFront);
    ElemId y = l.insert_after(x);
    ElemId z = l.insert_after(y);
    CHECK_FALSE(l.pred(z, L('c')).has_value());
    l.color(x, L('c'));
    CHECK(l.pred(z, L('c')) == x);
    CHECK_FALSE(l.succ(x, L('c')).has_value());
    CHECK_FALSE(l.pred(x, L('c')).has_value());
}

TEST_CASE("color is idempotent and uncolor round-trips") {
    OrderList l;
    ElemId x = l.insert_after(kFront);
    ElemId y = l.insert_after(x);
    l.color(x, L('c'));
    l.color(x, L('c'));
    CHECK(l.color_count() == 1);
    l.uncolor(x, L('c'));
    CHECK_FALSE(l.pred(y, L('c')).has_value());
    try {
        l.uncolor(x, L('c'));
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ColorAbsent);
    }
}

TEST_CASE("removal rules") {
    OrderList l;
    ElemId x = l.insert_after(kFront);
    l.color(x, L('c'));
    try {
        l.remove(x);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ElementStillColored);
    }
    l.uncolor(x, L('c'));
    l.remove(x);
    CHECK(l.size() == 0);
    try {
        l.insert_after(x);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownElement);
    }
}

TEST_CASE("a million adjacent insertions stay ordered") {
    OrderList l;
    ElemId first = l.insert_after(kFront);
    ElemId anchor = first;
    std::vector<ElemId> all{first};
    for (int i = 0; i < 1'000'000; ++i) {
        anchor = l.insert_after(anchor);
        all.push_back(anchor);
    }
    CHECK(l.relabel_count() > 0);
    bool ordered = true;
    for (std::size_t i = 1; i < all.size(); i += 997) ordered = ordered && l.less(all[i - 1], all[i]);
    CHECK(ordered);
    CHECK(l.to_vector() == all);

    // Hammering one gap from the front.
    OrderList m;
    ElemId tail = m.insert_after(kFront);
    std::deque<ElemId> rev{tail};
    for (int i = 0; i < 200'000; ++i) rev.push_front(m.insert_after(kFront));
    CHECK(m.to_vector() == std::vector<ElemId>(rev.begin(), rev.end()));
}

TEST_CASE("random operations match a linear-scan list") {
    std::mt19937 rng(3);
    OrderList l;
    oracle::NaiveOrderList naive;
    std::map<ElemId, oracle::NaiveOrderList::Id> to_naive;
    std::vector<ElemId> live;
    const std::vector<Label> colors{L('a'), L('b'), L('c'), L('d')};
    for (int step = 0; step < 20000; ++step) {
        const int what = static_cast<int>(rng() % 10);
        if (live.empty() || what < 3) {
            if (live.empty() || rng() % 8 == 0) {
                ElemId e = l.insert_after(kFront);
                to_naive[e] = naive.insert_after(oracle::NaiveOrderList::kFront);
                live.push_back(e);
            } else {
                ElemId at = live[rng() % live.size()];
                const bool after = rng() % 2;
                ElemId e = after ? l.insert_after(at) : l.insert_before(at);
                to_naive[e] = after ? naive.insert_after(to_naive[at]) : naive.insert_before(to_naive[at]);
                live.push_back(e);
            }
        } else if (what < 5) {
            ElemId e = live[rng() % live.size()];
            Label c = colors[rng() % colors.size()];
            l.color(e, c);
            naive.color(to_naive[e], c);
        } else if (what < 6) {
            ElemId e = live[rng() % live.size()];
            for (Label c : colors)
                if (l.has_color(e, c)) {
                    l.uncolor(e, c);
                    naive.uncolor(to_naive[e], c);
                    break;
                }
        } else if (what < 7 && live.size() > 1) {
            const std::size_t k = rng() % live.size();
            ElemId e = live[k];
            for (Label c : colors)
                if (l.has_color(e, c)) {
                    l.uncolor(e, c);
                    naive.uncolor(to_naive[e], c);
                }
            l.remove(e);
            naive.remove(to_naive[e]);
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(k));
        } else {
            ElemId e = live[rng() % live.size()];
            Label c = colors[rng() % colors.size()];
            auto p = l.pred(e, c);
            auto np = naive.pred(to_naive[e], c);
            CHECK(p.has_value() == np.has_value());
            if (p && np) CHECK(to_naive[*p] == *np);
            auto s = l.succ(e, c);
            auto ns = naive.succ(to_naive[e], c);
            CHECK(s.has_value() == ns.has_value());
            if (s && ns) CHECK(to_naive[*s] == *ns);
            ElemId f = live[rng() % live.size()];
            CHECK(l.less(e, f) == naive.less(to_naive[e], to_naive[f]));
        }
    }
    std::vector<oracle::NaiveOrderList::Id> mapped;
    for (ElemId e : l.to_vector()) mapped.push_back(to_naive[e]);
    CHECK(mapped == naive.order());
}

} // TEST_SUITE
