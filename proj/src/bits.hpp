#pragma once

#include "pentaforge/graph.hpp"

namespace pentaforge::detail {

template <class F>
void for_each_bit(const Row& r, F&& f) {
    for (auto i = r.find_first(); i != Row::npos; i = r.find_next(i)) f(static_cast<int>(i));
}

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace pentaforge::detail
