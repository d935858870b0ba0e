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

#pragma once

#include "updom/graph.hpp"
#include "updom/oracle.hpp"

namespace updom {

/// D(G) = Tr(G) of a split graph in O(n + m).
///
/// When some clique vertex has no neighbor in the independent side the value
/// is omega and the witness is upper domatic; otherwise it is omega + 1 and
/// the witness is transitive with the independent side first. The witness is
/// re-verified before returning. Throws ContractError for an invalid
/// certificate and VerificationError if the witness fails its check.
SolveResult upper_domatic_split(const Graph &g, const SplitCertificate &cert);

/// Recognizes the split structure first; throws ClassMismatchError when g is
/// not split.
SolveResult upper_domatic_split(const Graph &g);

} // namespace updom
