#include "cyclichall/closed_form.hpp"

#include <algorithm>

namespace cyclichall {

SimpleExtensionProfile simple_extension_profile(const Multipartition& rho, int a, int l) {
    const CycleQuiver& q = rho.quiver();
    int av = q.vertex(a);
    SimpleExtensionProfile prof{av, l, 0, 0};
    for (int part : rho.component(av).parts()) {
        if (part == l) ++prof.n_l;
        if (part > l) ++prof.m_l;
    }
    if (prof.n_l == 0)
        throw std::invalid_argument("simple_extension_profile: rho has no part of length l at component a");
    return prof;
}

IntPolynomial closed_form_from_profile(const SimpleExtensionProfile& prof) {
    return IntPolynomial::geometric(prof.n_l, prof.m_l);
}

IntPolynomial closed_form_simple_l(const Multipartition& rho, int a, int l) {
    return closed_form_from_profile(simple_extension_profile(rho, a, l));
}

std::vector<std::pair<int, Multipartition>> reverse_insertions(const Multipartition& rho, int a, int k) {
    const CycleQuiver& q = rho.quiver();
    int av = q.vertex(a);
    int src = q.prev(av);
    std::vector<std::pair<int, Multipartition>> found;

    std::vector<int> lengths = rho.component(av).parts();
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    for (int l : lengths) {
        int pos = -1;
        const auto& parts = rho.component(av).parts();
        for (int j = 0; j < static_cast<int>(parts.size()); ++j)
            if (parts[static_cast<std::size_t>(j)] == l) {
                pos = j + 1;
                break;
            }
        Multipartition pi = rho.with_component(av, rho.component(av).removed(pos));
        int x = l - 1;
        if (x == 0) {
            // split extension: nothing returns to the source component,
            // k points one past its last part
            if (k == pi.component(src).num_parts() + 1) found.emplace_back(l, pi);
            continue;
        }
        pi = pi.with_component(src, pi.component(src).with_part(x));
        if (k >= 1 && k <= pi.component(src).num_parts() && pi.component(src).part(k) == x &&
            insert_pi(pi, av, k) == rho)
            found.emplace_back(l, pi);
    }
    return found;
}

IntPolynomial closed_form_simple(const Multipartition& rho, int a, int k) {
    auto cands = reverse_insertions(rho, a, k);
    if (cands.empty())
        throw std::invalid_argument("closed_form_simple: rho is not an insertion at (a, k)");
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (cands[i].first != cands[0].first)
            throw std::invalid_argument("closed_form_simple: (rho, a, k) is ambiguous; use closed_form_simple_l");
    return closed_form_simple_l(rho, a, cands[0].first);
}

}  // namespace cyclichall
