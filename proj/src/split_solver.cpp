/*
Copyright 2026 The updom Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "updom/split_solver.hpp"

#include "updom/error.hpp"
#include "updom/partition.hpp"

#include <algorithm>

namespace updom {

SolveResult upper_domatic_split(const Graph &g, const SplitCertificate &cert) {
    try {
        verify(g, cert);
    } catch (const VerificationError &e) {
        throw ContractError(std::string("upper_domatic_split: ") + e.what());
    }
    if (g.order() == 0)
        return {0, {}};
    std::vector<char> in_s(static_cast<size_t>(g.order()), 0);
    for (Vertex s : cert.independent)
        in_s[static_cast<size_t>(s)] = 1;
    Vertex lonely = -1;
    for (Vertex k : cert.clique) {
        bool touches = false;
        for (Vertex w : g.neighbors(k))
            touches = touches || in_s[static_cast<size_t>(w)];
        if (!touches) {
            lonely = k;
            break;
        }
    }
    SolveResult out;
    if (lonely >= 0) {
        std::vector<Vertex> first(cert.independent);
        first.push_back(lonely);
        std::sort(first.begin(), first.end());
        out.witness.blocks.push_back(first);
        for (Vertex k : cert.clique)
            if (k != lonely)
                out.witness.blocks.push_back({k});
        out.value = cert.omega;
        if (!classify_partition(g, out.witness).upper_domatic || out.witness.order() != out.value)
            throw VerificationError("split witness of order omega is not upper domatic");
    } else {
        out.witness.blocks.push_back(cert.independent);
        std::sort(out.witness.blocks.front().begin(), out.witness.blocks.front().end());
        for (Vertex k : cert.clique)
            out.witness.blocks.push_back({k});
        out.value = cert.omega + 1;
        if (!classify_partition(g, out.witness).transitive || out.witness.order() != out.value)
            throw VerificationError("split witness of order omega + 1 is not transitive");
    }
    return out;
}

SolveResult upper_domatic_split(const Graph &g) {
    auto cert = recognize_split(g);
    if (!cert)
        throw ClassMismatchError("upper_domatic_split: graph is not split");
    return upper_domatic_split(g, *cert);
}

} // namespace updom
