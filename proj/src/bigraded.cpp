#include "sfh/bigraded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sfh {

long long BigradedGroup::dim(Bigrading bg) const {
    auto it = dims_.find(bg);
    return it == dims_.end() ? 0 : it->second;
}

void BigradedGroup::add(Bigrading bg, long long d) {
    if (d < 0) throw std::invalid_argument("negative dimension");
    if (d == 0) return;
    dims_[bg] += d;
}

long long BigradedGroup::total_dim() const {
    long long t = 0;
    for (const auto& [bg, d] : dims_) t += d;
    return t;
}

int BigradedGroup::max_alexander() const {
    if (dims_.empty()) throw std::runtime_error("max_alexander of the zero group");
    int best = dims_.begin()->first.alexander;
    for (const auto& [bg, d] : dims_)
        if (bg.alexander > best) best = bg.alexander;
    return best;
}

std::map<int, long long> BigradedGroup::alexander_slice(int alexander) const {
    std::map<int, long long> out;
    for (const auto& [bg, d] : dims_)
        if (bg.alexander == alexander) out[bg.maslov] += d;
    return out;
}

LaurentPoly BigradedGroup::euler_poly() const {
    LaurentPoly p;
    for (const auto& [bg, d] : dims_) {
        const long long sign = (bg.maslov % 2 == 0) ? 1 : -1;
        p = p + LaurentPoly::monomial(sign * d, bg.alexander);
    }
    return p;
}

BigradedGroup BigradedGroup::tensor(const BigradedGroup& a, const BigradedGroup& b) {
    BigradedGroup r;
    for (const auto& [ga, da] : a.dims_)
        for (const auto& [gb, db] : b.dims_)
            r.add({ga.maslov + gb.maslov, ga.alexander + gb.alexander}, da * db);
    return r;
}

BigradedGroup BigradedGroup::direct_sum(const BigradedGroup& a, const BigradedGroup& b) {
    BigradedGroup r = a;
    for (const auto& [bg, d] : b.dims_) r.add(bg, d);
    return r;
}

std::string BigradedGroup::to_string() const {
    if (dims_.empty()) return "0";
    std::vector<std::pair<Bigrading, long long>> rows(dims_.begin(), dims_.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first.alexander != b.first.alexander) return a.first.alexander > b.first.alexander;
        return a.first.maslov > b.first.maslov;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [bg, d] : rows) {
        if (!first) os << " ";
        os << "(" << bg.maslov << "," << bg.alexander << "):" << d;
        first = false;
    }
    return os.str();
}

}  // namespace sfh
