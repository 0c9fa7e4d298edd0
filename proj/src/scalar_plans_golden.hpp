// Generated by tools/gen_plans from the derivation oracle. Do not edit;
// rebuild with gen_plans if the pair encodings change. A test re-derives
// these and fails on any drift.
#ifndef B2P1_SCALAR_PLANS_GOLDEN_HPP_
#define B2P1_SCALAR_PLANS_GOLDEN_HPP_

namespace b2p1::plans {

inline constexpr const char* kConsistentCase1 = R"PLAN(
1/1 0 -1 1 0 : f.0.2.0
-1/1 0 -1 1 1 : f.0.1.0 h.0.1.0
-1/1 0 -1 1 1 : f.0.2.0 h.0.0.0
1/3 0 -1 2 0 : f.0.4.0
-1/1 0 0 0 0 : f.0.0.2
1/1 0 0 0 0 : f.2.0.0
-1/1 0 0 0 1 : f.1.0.0 h.1.0.0
-1/1 0 0 0 1 : f.2.0.0 h.0.0.0
2/3 0 0 1 0 : f.2.2.0
1/3 0 1 0 0 : f.4.0.0
-1/1 1 -1 1 0 : f.0.0.1 f.0.2.0
-2/1 1 -1 1 0 : f.0.1.0 f.0.1.1
-1/1 1 0 0 0 : f.0.0.1 f.2.0.0
-2/1 1 0 0 0 : f.1.0.0 f.1.0.1
)PLAN";

inline constexpr const char* kConsistentCase2 = R"PLAN(
1/1 0 -1 1 0 : f.0.2.0
-1/1 0 -1 1 1 : f.0.1.0 h.0.1.0
-1/1 0 -1 1 1 : f.0.2.0 h.0.0.0
-1/6 0 -1 2 0 : f.0.4.0
-1/120 0 -1 3 0 : f.0.6.0
-1/1 0 0 0 0 : f.0.0.2
1/1 0 0 0 0 : f.2.0.0
-1/1 0 0 0 1 : f.1.0.0 h.1.0.0
-1/1 0 0 0 1 : f.2.0.0 h.0.0.0
1/2 0 0 1 0 : f.0.2.2
-1/3 0 0 1 0 : f.2.2.0
-1/24 0 0 2 0 : f.0.4.2
-1/40 0 0 2 0 : f.2.4.0
1/2 0 1 0 0 : f.2.0.2
-1/6 0 1 0 0 : f.4.0.0
-1/12 0 1 1 0 : f.2.2.2
-1/40 0 1 1 0 : f.4.2.0
-1/24 0 2 0 0 : f.4.0.2
-1/120 0 2 0 0 : f.6.0.0
-1/1 1 -1 1 0 : f.0.0.1 f.0.2.0
-2/1 1 -1 1 0 : f.0.1.0 f.0.1.1
3/2 1 -1 2 0 : f.0.1.0 f.0.3.1
1/1 1 -1 2 0 : f.0.1.1 f.0.3.0
-3/2 1 -1 2 0 : f.0.2.0 f.0.2.1
-1/1 1 0 0 0 : f.0.0.1 f.2.0.0
-2/1 1 0 0 0 : f.1.0.0 f.1.0.1
-1/1 1 0 1 0 : f.0.0.1 f.0.2.2
1/1 1 0 1 0 : f.0.0.1 f.2.2.0
-1/1 1 0 1 0 : f.0.0.2 f.0.2.1
1/1 1 0 1 0 : f.0.1.0 f.2.1.1
1/1 1 0 1 0 : f.0.1.1 f.2.1.0
-1/2 1 0 1 0 : f.0.2.0 f.2.0.1
-1/2 1 0 1 0 : f.0.2.1 f.2.0.0
1/1 1 0 1 0 : f.1.0.0 f.1.2.1
1/1 1 0 1 0 : f.1.0.1 f.1.2.0
-1/1 1 1 0 0 : f.0.0.1 f.2.0.2
1/2 1 1 0 0 : f.0.0.1 f.4.0.0
-1/1 1 1 0 0 : f.0.0.2 f.2.0.1
1/1 1 1 0 0 : f.1.0.0 f.3.0.1
1/1 1 1 0 0 : f.1.0.1 f.3.0.0
-1/2 1 1 0 0 : f.2.0.0 f.2.0.1
-3/2 2 -2 2 0 : f.0.1.0 f.0.1.0 f.0.2.0
-1/2 2 -1 1 0 : f.0.1.0 f.0.1.0 f.2.0.0
-2/1 2 -1 1 0 : f.0.1.0 f.1.0.0 f.1.1.0
-1/2 2 -1 1 0 : f.0.2.0 f.1.0.0 f.1.0.0
-3/2 2 0 0 0 : f.1.0.0 f.1.0.0 f.2.0.0
)PLAN";

inline constexpr const char* kConsistentCase3 = R"PLAN(
1/1 0 -1 1 0 : f.0.2.0
-1/1 0 0 0 0 : f.0.0.2
1/1 0 0 0 0 : f.2.0.0
-1/1 0 0 0 1 : f.1.0.0 h.1.0.0
-1/1 0 0 0 1 : f.2.0.0 h.0.0.0
1/2 0 0 1 0 : f.0.2.2
-1/3 0 0 1 0 : f.2.2.0
1/2 0 1 0 0 : f.2.0.2
-1/6 0 1 0 0 : f.4.0.0
-1/24 0 2 0 0 : f.4.0.2
-1/120 0 2 0 0 : f.6.0.0
-1/1 1 0 0 0 : f.0.0.1 f.2.0.0
-2/1 1 0 0 0 : f.1.0.0 f.1.0.1
)PLAN";

inline constexpr const char* kConsistentCase4 = R"PLAN(
1/1 0 -1 1 0 : f.0.2.0
-1/1 0 -1 1 1 : f.0.1.0 h.0.1.0
-1/1 0 -1 1 1 : f.0.2.0 h.0.0.0
-1/6 0 -1 2 0 : f.0.4.0
-1/1 0 0 0 0 : f.0.0.2
1/1 0 0 0 0 : f.2.0.0
-1/1 0 0 0 1 : f.1.0.0 h.1.0.0
-1/1 0 0 0 1 : f.2.0.0 h.0.0.0
1/2 0 0 1 0 : f.0.2.2
-1/3 0 0 1 0 : f.2.2.0
1/2 0 1 0 0 : f.2.0.2
-1/6 0 1 0 0 : f.4.0.0
-1/1 1 -1 1 0 : f.0.0.1 f.0.2.0
-2/1 1 -1 1 0 : f.0.1.0 f.0.1.1
-1/1 1 0 0 0 : f.0.0.1 f.2.0.0
-2/1 1 0 0 0 : f.1.0.0 f.1.0.1
-3/2 2 -2 2 0 : f.0.1.0 f.0.1.0 f.0.2.0
-1/2 2 -1 1 0 : f.0.1.0 f.0.1.0 f.2.0.0
-2/1 2 -1 1 0 : f.0.1.0 f.1.0.0 f.1.1.0
-1/2 2 -1 1 0 : f.0.2.0 f.1.0.0 f.1.0.0
-3/2 2 0 0 0 : f.1.0.0 f.1.0.0 f.2.0.0
)PLAN";

inline constexpr const char* kPrintedCase1 = R"PLAN(
1/1 0 -1 1 0 : f.0.2.0
-1/1 0 -1 1 1 : f.0.1.0 h.0.1.0
-1/1 0 -1 1 1 : f.0.2.0 h.0.0.0
1/3 0 -1 2 0 : f.0.4.0
-1/1 0 0 0 0 : f.0.0.2
1/1 0 0 0 0 : f.2.0.0
-1/1 0 0 0 1 : f.1.0.0 h.1.0.0
-1/1 0 0 0 1 : f.2.0.0 h.0.0.0
2/3 0 0 1 0 : f.2.2.0
1/3 0 1 0 0 : f.4.0.0
-1/1 1 -1 1 0 : f.0.0.1 f.0.2.0
-2/1 1 -1 1 0 : f.0.1.0 f.0.1.1
-1/1 1 0 0 0 : f.0.0.1 f.2.0.0
-2/1 1 0 0 0 : f.1.0.0 f.1.0.1
)PLAN";

inline constexpr const char* kPrintedCase2 = R"PLAN(
1/1 0 -1 1 0 : f.0.2.0
-1/1 0 -1 1 1 : f.0.1.0 h.0.0.0
-1/1 0 -1 1 1 : f.0.2.0 h.0.0.0
-1/6 0 -1 2 0 : f.0.4.0
1/120 0 -1 3 0 : f.0.6.0
-1/1 0 0 0 0 : f.0.0.2
1/1 0 0 0 0 : f.2.0.0
-1/1 0 0 0 1 : f.1.0.0 h.0.0.0
-1/1 0 0 0 1 : f.2.0.0 h.0.0.0
1/2 0 0 1 0 : f.0.2.2
-1/3 0 0 1 0 : f.2.2.0
-1/24 0 0 2 0 : f.0.4.2
1/40 0 0 2 0 : f.2.4.0
-2/1 0 1 0 0 : f.1.0.0 f.1.0.1
1/2 0 1 0 0 : f.2.0.2
-1/6 0 1 0 0 : f.4.0.0
-1/12 0 1 1 0 : f.2.2.2
1/40 0 1 1 0 : f.4.2.0
-1/24 0 2 0 0 : f.4.0.2
1/120 0 2 0 0 : f.6.0.0
-1/1 1 -2 1 0 : f.0.0.1 f.0.2.2
-1/1 1 -2 1 0 : f.0.0.2 f.0.2.1
-1/1 1 -1 0 0 : f.0.0.1 f.2.0.2
-1/1 1 -1 0 0 : f.0.0.2 f.2.0.1
-2/1 1 -1 1 0 : f.0.1.0 f.1.1.0
1/2 1 -1 2 0 : f.0.0.1 f.0.4.0
1/1 1 -1 2 0 : f.0.1.0 f.0.3.1
-1/2 1 -1 2 0 : f.0.2.0 f.0.2.1
1/1 1 -1 2 0 : f.0.3.0 f.1.1.0
-1/1 1 0 0 0 : f.0.0.1 f.2.0.0
1/1 1 0 1 0 : f.0.0.1 f.2.2.0
1/1 1 0 1 0 : f.0.1.0 f.2.1.1
-1/2 1 0 1 0 : f.0.2.0 f.2.0.1
-1/2 1 0 1 0 : f.0.2.1 f.2.0.0
1/1 1 0 1 0 : f.1.0.0 f.1.2.1
1/1 1 0 1 0 : f.1.0.1 f.1.2.0
1/1 1 0 1 0 : f.1.1.0 f.2.1.0
1/2 1 1 0 0 : f.0.0.1 f.4.0.0
1/1 1 1 0 0 : f.1.0.0 f.3.0.1
1/1 1 1 0 0 : f.1.0.1 f.3.0.0
-1/2 1 1 0 0 : f.2.0.0 f.2.0.1
-1/1 2 -3 2 0 : f.0.0.1 f.0.1.0 f.0.3.1
-1/1 2 -3 2 0 : f.0.0.1 f.0.2.0 f.0.2.1
-1/1 2 -3 2 0 : f.0.1.0 f.0.2.1 f.1.1.0
1/1 2 -3 3 0 : f.0.0.1 f.0.2.1 f.0.4.0
1/1 2 -3 3 0 : f.0.0.1 f.0.3.0 f.0.3.1
1/1 2 -3 3 0 : f.0.2.1 f.0.3.0 f.1.1.0
1/1 2 -2 1 0 : f.0.0.1 f.0.1.0 f.2.1.1
-1/1 2 -2 1 0 : f.0.0.1 f.0.2.0
-1/1 2 -2 1 0 : f.0.0.1 f.0.2.0 f.2.0.1
-1/1 2 -2 1 0 : f.0.0.1 f.0.2.1 f.2.0.0
-1/1 2 -2 1 0 : f.0.1.0 f.1.1.0 f.2.0.1
-1/1 2 -2 1 0 : f.0.2.1 f.1.0.0 f.1.0.1
1/1 2 -2 2 0 : f.0.0.1 f.0.2.1 f.2.2.0
1/2 2 -2 2 0 : f.0.0.1 f.0.3.0 f.2.1.1
1/2 2 -2 2 0 : f.0.0.1 f.0.3.1 f.2.1.0
1/2 2 -2 2 0 : f.0.0.1 f.0.4.0 f.2.0.1
1/2 2 -2 2 0 : f.0.0.1 f.1.2.0 f.1.2.1
-3/2 2 -2 2 0 : f.0.1.0 f.0.1.0 f.0.2.0
1/2 2 -2 2 0 : f.0.2.1 f.1.0.1 f.1.2.0
1/2 2 -2 2 0 : f.0.2.1 f.1.1.0 f.2.1.0
1/2 2 -2 2 0 : f.0.3.0 f.1.1.0 f.2.0.1
1/1 2 -1 0 0 : f.0.0.1 f.1.0.0 f.3.0.1
1/1 2 -1 0 0 : f.0.0.1 f.2.0.0 f.2.0.1
-1/1 2 -1 0 0 : f.1.0.0 f.1.0.1 f.2.0.1
1/2 2 -1 1 0 : f.0.0.1 f.0.2.1 f.4.0.0
1/2 2 -1 1 0 : f.0.0.1 f.1.2.0 f.3.0.1
1/2 2 -1 1 0 : f.0.0.1 f.1.2.1 f.3.0.0
1/1 2 -1 1 0 : f.0.0.1 f.2.0.1 f.2.2.0
1/2 2 -1 1 0 : f.0.0.1 f.2.1.0 f.2.1.1
-1/2 2 -1 1 0 : f.0.1.0 f.0.1.0 f.2.0.0
-2/1 2 -1 1 0 : f.0.1.0 f.1.0.0 f.1.1.0
-1/2 2 -1 1 0 : f.0.2.0 f.1.0.0 f.1.0.0
1/2 2 -1 1 0 : f.0.2.1 f.1.0.1 f.3.0.0
1/2 2 -1 1 0 : f.1.0.1 f.1.2.0 f.2.0.1
1/2 2 -1 1 0 : f.1.1.0 f.2.0.1 f.2.1.0
1/2 2 0 0 0 : f.0.0.1 f.2.0.1 f.4.0.0
1/2 2 0 0 0 : f.0.0.1 f.3.0.0 f.3.0.1
1/2 2 0 0 0 : f.1.0.1 f.2.0.1 f.3.0.0
-1/1 4 -4 1 0 : f.0.0.1 f.1.0.0 f.1.2.1
)PLAN";

inline constexpr const char* kPrintedCase3 = R"PLAN(
1/1 0 -1 1 0 : f.0.2.0
-1/1 0 0 0 0 : f.0.0.2
1/1 0 0 0 0 : f.2.0.0
-1/1 0 0 0 1 : f.1.0.0 h.1.0.0
-1/1 0 0 0 1 : f.2.0.0 h.0.0.0
1/2 0 0 1 0 : f.0.2.2
-1/3 0 0 1 0 : f.2.2.0
1/2 0 1 0 0 : f.2.0.2
-1/6 0 1 0 0 : f.4.0.0
-1/24 0 2 0 0 : f.4.0.2
-1/120 0 2 0 0 : f.6.0.0
-1/1 1 0 0 0 : f.0.0.1 f.2.0.0
-2/1 1 0 0 0 : f.1.0.0 f.1.0.1
)PLAN";

inline constexpr const char* kPrintedCase4 = R"PLAN(
1/1 0 -1 1 0 : f.0.2.0
-1/6 0 -1 2 0 : f.0.4.0
-1/1 0 0 0 0 : f.0.0.2
1/1 0 0 0 0 : f.2.0.0
-1/1 0 0 0 1 : f.0.1.0 h.0.1.0
-1/1 0 0 0 1 : f.0.2.0 h.0.0.0
-1/1 0 0 0 1 : f.1.0.0 h.1.0.0
-1/1 0 0 0 1 : f.2.0.0 h.0.0.0
1/2 0 0 1 0 : f.0.2.2
-1/3 0 0 1 0 : f.2.2.0
1/2 0 1 0 0 : f.2.0.2
-1/6 0 1 0 0 : f.4.0.0
-1/1 1 -1 1 0 : f.0.0.1 f.0.2.0
-2/1 1 -1 1 0 : f.0.1.0 f.0.1.1
-1/1 1 0 0 0 : f.0.0.1 f.2.0.0
-2/1 1 0 0 0 : f.1.0.0 f.1.0.1
-3/2 2 -2 2 0 : f.0.1.0 f.0.1.0 f.0.2.0
-1/2 2 -1 1 0 : f.0.1.0 f.0.1.0 f.2.0.0
-1/2 2 -1 1 0 : f.0.2.0 f.1.0.0 f.1.0.0
-4/1 2 0 0 0 : f.0.1.0 f.1.0.0 f.1.0.1
-3/2 2 0 0 0 : f.1.0.0 f.1.0.0 f.2.0.0
)PLAN";

inline constexpr const char* kDiffCase2 = R"PLAN(
1/1 0 -1 1 1 : f.0.1.0 h.0.0.0
-1/1 0 -1 1 1 : f.0.1.0 h.0.1.0
-1/60 0 -1 3 0 : f.0.6.0
1/1 0 0 0 1 : f.1.0.0 h.0.0.0
-1/1 0 0 0 1 : f.1.0.0 h.1.0.0
-1/20 0 0 2 0 : f.2.4.0
2/1 0 1 0 0 : f.1.0.0 f.1.0.1
-1/20 0 1 1 0 : f.4.2.0
-1/60 0 2 0 0 : f.6.0.0
1/1 1 -2 1 0 : f.0.0.1 f.0.2.2
1/1 1 -2 1 0 : f.0.0.2 f.0.2.1
1/1 1 -1 0 0 : f.0.0.1 f.2.0.2
1/1 1 -1 0 0 : f.0.0.2 f.2.0.1
-1/1 1 -1 1 0 : f.0.0.1 f.0.2.0
-2/1 1 -1 1 0 : f.0.1.0 f.0.1.1
2/1 1 -1 1 0 : f.0.1.0 f.1.1.0
-1/2 1 -1 2 0 : f.0.0.1 f.0.4.0
1/2 1 -1 2 0 : f.0.1.0 f.0.3.1
1/1 1 -1 2 0 : f.0.1.1 f.0.3.0
-1/1 1 -1 2 0 : f.0.2.0 f.0.2.1
-1/1 1 -1 2 0 : f.0.3.0 f.1.1.0
-2/1 1 0 0 0 : f.1.0.0 f.1.0.1
-1/1 1 0 1 0 : f.0.0.1 f.0.2.2
-1/1 1 0 1 0 : f.0.0.2 f.0.2.1
1/1 1 0 1 0 : f.0.1.1 f.2.1.0
-1/1 1 0 1 0 : f.1.1.0 f.2.1.0
-1/1 1 1 0 0 : f.0.0.1 f.2.0.2
-1/1 1 1 0 0 : f.0.0.2 f.2.0.1
1/1 2 -3 2 0 : f.0.0.1 f.0.1.0 f.0.3.1
1/1 2 -3 2 0 : f.0.0.1 f.0.2.0 f.0.2.1
1/1 2 -3 2 0 : f.0.1.0 f.0.2.1 f.1.1.0
-1/1 2 -3 3 0 : f.0.0.1 f.0.2.1 f.0.4.0
-1/1 2 -3 3 0 : f.0.0.1 f.0.3.0 f.0.3.1
-1/1 2 -3 3 0 : f.0.2.1 f.0.3.0 f.1.1.0
-1/1 2 -2 1 0 : f.0.0.1 f.0.1.0 f.2.1.1
1/1 2 -2 1 0 : f.0.0.1 f.0.2.0
1/1 2 -2 1 0 : f.0.0.1 f.0.2.0 f.2.0.1
1/1 2 -2 1 0 : f.0.0.1 f.0.2.1 f.2.0.0
1/1 2 -2 1 0 : f.0.1.0 f.1.1.0 f.2.0.1
1/1 2 -2 1 0 : f.0.2.1 f.1.0.0 f.1.0.1
-1/1 2 -2 2 0 : f.0.0.1 f.0.2.1 f.2.2.0
-1/2 2 -2 2 0 : f.0.0.1 f.0.3.0 f.2.1.1
-1/2 2 -2 2 0 : f.0.0.1 f.0.3.1 f.2.1.0
-1/2 2 -2 2 0 : f.0.0.1 f.0.4.0 f.2.0.1
-1/2 2 -2 2 0 : f.0.0.1 f.1.2.0 f.1.2.1
-1/2 2 -2 2 0 : f.0.2.1 f.1.0.1 f.1.2.0
-1/2 2 -2 2 0 : f.0.2.1 f.1.1.0 f.2.1.0
-1/2 2 -2 2 0 : f.0.3.0 f.1.1.0 f.2.0.1
-1/1 2 -1 0 0 : f.0.0.1 f.1.0.0 f.3.0.1
-1/1 2 -1 0 0 : f.0.0.1 f.2.0.0 f.2.0.1
1/1 2 -1 0 0 : f.1.0.0 f.1.0.1 f.2.0.1
-1/2 2 -1 1 0 : f.0.0.1 f.0.2.1 f.4.0.0
-1/2 2 -1 1 0 : f.0.0.1 f.1.2.0 f.3.0.1
-1/2 2 -1 1 0 : f.0.0.1 f.1.2.1 f.3.0.0
-1/1 2 -1 1 0 : f.0.0.1 f.2.0.1 f.2.2.0
-1/2 2 -1 1 0 : f.0.0.1 f.2.1.0 f.2.1.1
-1/2 2 -1 1 0 : f.0.2.1 f.1.0.1 f.3.0.0
-1/2 2 -1 1 0 : f.1.0.1 f.1.2.0 f.2.0.1
-1/2 2 -1 1 0 : f.1.1.0 f.2.0.1 f.2.1.0
-1/2 2 0 0 0 : f.0.0.1 f.2.0.1 f.4.0.0
-1/2 2 0 0 0 : f.0.0.1 f.3.0.0 f.3.0.1
-3/2 2 0 0 0 : f.1.0.0 f.1.0.0 f.2.0.0
-1/2 2 0 0 0 : f.1.0.1 f.2.0.1 f.3.0.0
1/1 4 -4 1 0 : f.0.0.1 f.1.0.0 f.1.2.1
)PLAN";

inline constexpr const char* kDiffCase4 = R"PLAN(
-1/1 0 -1 1 1 : f.0.1.0 h.0.1.0
-1/1 0 -1 1 1 : f.0.2.0 h.0.0.0
1/1 0 0 0 1 : f.0.1.0 h.0.1.0
1/1 0 0 0 1 : f.0.2.0 h.0.0.0
-2/1 2 -1 1 0 : f.0.1.0 f.1.0.0 f.1.1.0
4/1 2 0 0 0 : f.0.1.0 f.1.0.0 f.1.0.1
)PLAN";

}  // namespace b2p1::plans

#endif  // B2P1_SCALAR_PLANS_GOLDEN_HPP_
