#include "dlgbn/trivalue.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlgbn {

Interp3 Interp3::from_state(State s, std::size_t n) {
    Interp3 i(n, Tri::False);
    for (std::size_t k = 0; k < n; ++k)
        if (s >> k & 1u) i.vals_[k] = Tri::True;
    return i;
}

bool Interp3::is_two_valued() const {
    for (Tri v : vals_)
        if (v == Tri::Unknown) return false;
    return true;
}

State Interp3::to_state() const {
    State s = 0;
    for (std::size_t k = 0; k < vals_.size(); ++k) {
        if (vals_[k] == Tri::Unknown) throw std::logic_error("to_state on a partial interpretation");
        if (vals_[k] == Tri::True) s |= State{1} << k;
    }
    return s;
}

bool Interp3::leq_s(const Interp3& other) const {
    for (std::size_t k = 0; k < vals_.size(); ++k)
        if (!dlgbn::leq_s(vals_[k], other.vals_[k])) return false;
    return true;
}

bool Interp3::leq_t(const Interp3& other) const {
    for (std::size_t k = 0; k < vals_.size(); ++k)
        if (!dlgbn::leq_t(vals_[k], other.vals_[k])) return false;
    return true;
}

bool Interp3::consistent_with(const Interp3& other) const {
    for (std::size_t k = 0; k < vals_.size(); ++k) {
        Tri a = vals_[k], b = other.vals_[k];
        if (a != b && a != Tri::Unknown && b != Tri::Unknown) return false;
    }
    return true;
}

std::optional<Interp3> Interp3::overlap(const Interp3& other) const {
    if (!consistent_with(other)) return std::nullopt;
    Interp3 out(vals_.size());
    for (std::size_t k = 0; k < vals_.size(); ++k)
        out.vals_[k] = vals_[k] == Tri::Unknown ? other.vals_[k] : vals_[k];
    return out;
}

unsigned Interp3::unknown_count() const {
    unsigned c = 0;
    for (Tri v : vals_)
        if (v == Tri::Unknown) ++c;
    return c;
}

bool Interp3::cell_contains(State s) const {
    for (std::size_t k = 0; k < vals_.size(); ++k) {
        bool bit = (s >> k) & 1u;
        if (vals_[k] == Tri::True && !bit) return false;
        if (vals_[k] == Tri::False && bit) return false;
    }
    return true;
}

std::vector<State> Interp3::cell_states() const {
    std::vector<std::size_t> free_pos;
    State base = 0;
    for (std::size_t k = 0; k < vals_.size(); ++k) {
        if (vals_[k] == Tri::Unknown)
            free_pos.push_back(k);
        else if (vals_[k] == Tri::True)
            base |= State{1} << k;
    }
    std::vector<State> out;
    out.reserve(std::size_t{1} << free_pos.size());
    for (State sub = 0; sub < (State{1} << free_pos.size()); ++sub) {
        State s = base;
        for (std::size_t j = 0; j < free_pos.size(); ++j)
            if (sub >> j & 1u) s |= State{1} << free_pos[j];
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string Interp3::value_string() const {
    std::string s;
    s.reserve(vals_.size());
    for (Tri v : vals_) s.push_back(static_cast<char>('0' + static_cast<int>(v)));
    return s;
}

std::string Interp3::subspace_string() const {
    std::string s;
    for (Tri v : vals_) {
        switch (v) {
            case Tri::False: s += '0'; break;
            case Tri::True: s += '1'; break;
            case Tri::Unknown: s += "⋆"; break;
        }
    }
    return s;
}

std::vector<Interp3> keep_s_minimal(const std::vector<Interp3>& xs) {
    std::vector<Interp3> out;
    for (const Interp3& a : xs) {
        bool minimal = true;
        for (const Interp3& b : xs) {
            if (&a != &b && b.leq_s(a) && !(b == a)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(a);
    }
    return out;
}

}  // namespace dlgbn
