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

#include "updom/tree_solver.hpp"

#include "updom/error.hpp"

#include <algorithm>
#include <numeric>

namespace updom {

int z_value(std::span<const int> values) {
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    int count = 0;
    for (int v : sorted)
        if (v >= count + 1)
            ++count;
    return count;
}

Chain greedy_chain(std::span<const int> values, std::span<const Vertex> ids) {
    std::vector<int> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (values[static_cast<size_t>(a)] != values[static_cast<size_t>(b)])
            return values[static_cast<size_t>(a)] < values[static_cast<size_t>(b)];
        if (!ids.empty())
            return ids[static_cast<size_t>(a)] < ids[static_cast<size_t>(b)];
        return a < b;
    });
    Chain out;
    for (int i : idx) {
        if (values[static_cast<size_t>(i)] >= out.z + 1) {
            ++out.z;
            out.chosen.push_back(i);
        } else {
            out.spare.push_back(i);
        }
    }
    return out;
}

std::vector<int> RootedTreeDP::child_values(Vertex v) const {
    std::vector<int> out;
    for (Vertex c : children[static_cast<size_t>(v)])
        out.push_back(rooted[static_cast<size_t>(c)]);
    return out;
}

RootedTreeDP rooted_dp(const Graph &g, Vertex root, std::span<const char> excluded, Vertex cut) {
    const int n = g.order();
    if (root < 0 || root >= n)
        throw ContractError("rooted_dp: root out of range");
    auto blocked = [&](Vertex v) {
        return v == cut || (!excluded.empty() && excluded[static_cast<size_t>(v)]);
    };
    if (blocked(root))
        throw ContractError("rooted_dp: root is excluded");
    RootedTreeDP dp;
    dp.root = root;
    dp.parent.assign(static_cast<size_t>(n), -1);
    dp.children.assign(static_cast<size_t>(n), {});
    dp.rooted.assign(static_cast<size_t>(n), 0);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[static_cast<size_t>(root)] = 1;
    dp.preorder.push_back(root);
    for (size_t head = 0; head < dp.preorder.size(); ++head) {
        const Vertex v = dp.preorder[head];
        for (Vertex w : g.neighbors(v)) {
            if (blocked(w) || w == dp.parent[static_cast<size_t>(v)])
                continue;
            if (seen[static_cast<size_t>(w)])
                throw ContractError("rooted_dp: component is not a tree");
            seen[static_cast<size_t>(w)] = 1;
            dp.parent[static_cast<size_t>(w)] = v;
            dp.children[static_cast<size_t>(v)].push_back(w);
            dp.preorder.push_back(w);
        }
    }
    std::vector<int> values;
    for (auto it = dp.preorder.rbegin(); it != dp.preorder.rend(); ++it) {
        values.clear();
        for (Vertex c : dp.children[static_cast<size_t>(*it)])
            values.push_back(dp.rooted[static_cast<size_t>(c)]);
        dp.rooted[static_cast<size_t>(*it)] = 1 + z_value(values);
    }
    return dp;
}

RootedTreeDP rooted_transitive_numbers(const Graph &tree, Vertex root) {
    if (!is_tree(tree))
        throw ClassMismatchError("rooted_transitive_numbers: input is not a tree");
    return rooted_dp(tree, root);
}

int transitive_number(const Graph &g, Vertex x, std::span<const char> excluded) {
    return rooted_dp(g, x, excluded).value(x);
}

std::vector<int> allowed_positions(std::span<const int> child_values, const Chain &chain,
                                   int child_index) {
    const int l = child_values[static_cast<size_t>(child_index)];
    const int z = chain.z;
    std::vector<int> out;
    auto pos = std::find(chain.chosen.begin(), chain.chosen.end(), child_index);
    if (pos == chain.chosen.end()) {
        for (int i = 1; i <= std::min(l, z); ++i)
            out.push_back(i);
        return out;
    }
    const int j = static_cast<int>(pos - chain.chosen.begin()) + 1;
    auto chosen_value = [&](int t) { return child_values[static_cast<size_t>(chain.chosen[static_cast<size_t>(t - 1)])]; };
    int low = j;
    if (j > 1) {
        bool spare_reaches = false;
        for (int s : chain.spare)
            spare_reaches = spare_reaches || child_values[static_cast<size_t>(s)] >= j;
        if (spare_reaches) {
            low = 1;
        } else {
            // Smallest r with chosen_value(t) >= t + 1 for every r <= t <= j - 1.
            int r = j;
            while (r > 1 && chosen_value(r - 1) >= r)
                --r;
            low = r;
        }
    }
    for (int i = low; i <= std::min(l, z); ++i)
        out.push_back(i);
    return out;
}

std::vector<int> allowed_positions_exact(std::span<const int> child_values, int z, int child_index) {
    const int l = child_values[static_cast<size_t>(child_index)];
    std::vector<int> others;
    for (size_t c = 0; c < child_values.size(); ++c)
        if (static_cast<int>(c) != child_index)
            others.push_back(child_values[c]);
    std::sort(others.rbegin(), others.rend());
    std::vector<int> out;
    for (int i = 1; i <= std::min(l, z); ++i) {
        // Greedy matching: largest needed position against largest value.
        bool ok = true;
        size_t idx = 0;
        for (int want = z; want >= 1 && ok; --want) {
            if (want == i)
                continue;
            ok = idx < others.size() && others[idx] >= want;
            ++idx;
        }
        if (ok)
            out.push_back(i);
    }
    return out;
}

std::vector<int> allowed_positions(const RootedTreeDP &dp, Vertex x, Vertex child) {
    const auto &kids = dp.children[static_cast<size_t>(x)];
    auto it = std::find(kids.begin(), kids.end(), child);
    if (it == kids.end())
        throw ContractError("allowed_positions: not a child");
    auto values = dp.child_values(x);
    Chain chain = greedy_chain(values, kids);
    return allowed_positions(values, chain, static_cast<int>(it - kids.begin()));
}

void assign_subtree(const RootedTreeDP &dp, Vertex v, int label, std::vector<int> &labels) {
    if (label < 1 || label > dp.value(v))
        throw ContractError("assign_subtree: label outside 1..rooted value");
    std::vector<std::pair<Vertex, int>> stack{{v, label}};
    while (!stack.empty()) {
        auto [x, s] = stack.back();
        stack.pop_back();
        labels[static_cast<size_t>(x)] = s;
        const auto &kids = dp.children[static_cast<size_t>(x)];
        auto values = dp.child_values(x);
        Chain chain = greedy_chain(values, kids);
        std::vector<int> target(kids.size(), 1);
        for (int t = 1; t <= s - 1; ++t)
            target[static_cast<size_t>(chain.chosen[static_cast<size_t>(t - 1)])] = t;
        for (size_t c = 0; c < kids.size(); ++c)
            stack.emplace_back(kids[c], target[c]);
    }
}

SolveResult transitivity_tree(const Graph &forest) {
    const int n = forest.order();
    if (n == 0)
        return {0, {}};
    if (forest.size() != n - static_cast<int>(components(forest).size()))
        throw ClassMismatchError("transitivity_tree: input is not a forest");
    std::vector<int> labels(static_cast<size_t>(n), 1);
    int best = 1;
    for (const auto &comp : components(forest)) {
        Vertex best_root = comp.front();
        int value = 0;
        for (Vertex r : comp) {
            int t = rooted_dp(forest, r).value(r);
            if (t > value) {
                value = t;
                best_root = r;
            }
        }
        if (value > best) {
            best = value;
            std::fill(labels.begin(), labels.end(), 1);
            assign_subtree(rooted_dp(forest, best_root), best_root, value, labels);
        }
    }
    return {best, partition_from_labeling(labels)};
}

} // namespace updom
