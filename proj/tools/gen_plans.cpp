// Regenerates src/scalar_plans_golden.hpp from the derivation oracle.
// Run manually; the output is committed so runtime never re-derives.
#include <cstdio>
#include <string>

#include "series.hpp"

using namespace b2p1;
using namespace b2p1::series;

int main(int argc, char** argv) {
    std::string out = "src/scalar_plans_golden.hpp";
    if (argc > 1) out = argv[1];
    FILE* fp = std::fopen(out.c_str(), "w");
    if (!fp) { std::perror("open"); return 1; }

    std::fprintf(fp,
                 "// Generated by tools/gen_plans from the derivation oracle. Do not edit;\n"
                 "// rebuild with gen_plans if the pair encodings change. A test re-derives\n"
                 "// these and fails on any drift.\n"
                 "#ifndef B2P1_SCALAR_PLANS_GOLDEN_HPP_\n"
                 "#define B2P1_SCALAR_PLANS_GOLDEN_HPP_\n\n"
                 "namespace b2p1::plans {\n\n");

    auto emit = [&](const char* name, const TermSum& ts) {
        std::fprintf(fp, "inline constexpr const char* %s = R\"PLAN(\n%s)PLAN\";\n\n", name,
                     ts.serialize().c_str());
    };
    emit("kConsistentCase1", derive_scalar_equation(Regime::Case1));
    emit("kConsistentCase2", derive_scalar_equation(Regime::Case2));
    emit("kConsistentCase3", derive_scalar_equation(Regime::Case3));
    emit("kConsistentCase4", derive_scalar_equation(Regime::Case4));
    emit("kPrintedCase1", printed_scalar_equation(Regime::Case1));
    emit("kPrintedCase2", printed_scalar_equation(Regime::Case2));
    emit("kPrintedCase3", printed_scalar_equation(Regime::Case3));
    emit("kPrintedCase4", printed_scalar_equation(Regime::Case4));
    emit("kDiffCase2", diff_termsums(derive_scalar_equation(Regime::Case2),
                                     printed_scalar_equation(Regime::Case2)));
    emit("kDiffCase4", diff_termsums(derive_scalar_equation(Regime::Case4),
                                     printed_scalar_equation(Regime::Case4)));

    std::fprintf(fp, "}  // namespace b2p1::plans\n\n#endif  // B2P1_SCALAR_PLANS_GOLDEN_HPP_\n");
    std::fclose(fp);
    return 0;
}
