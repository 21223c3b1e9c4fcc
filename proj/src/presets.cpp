#include "invy/presets.hpp"

namespace invy {

namespace {

// All figure presets share resonant drives and gamma2 = 1; frequencies are in
// units of gamma.  Negative amplitudes are written as magnitude @ 180 deg.
const std::vector<Preset> kPresets = {
    {"fig2a", "Fig. 2(a)", "Ω₁₂=Ω₂₄=Ω₂₃=0.5γ, a₂(0)=1",
     R"({"drive":{"omega12":[0.5,0],"omega24":[0.5,0],"omega23":[0.5,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":1.0},"initial":{"a2":[1.0,0]}})"},
    {"fig2b", "Fig. 2(b)", "Ω₁₂=Ω₂₄=Ω₂₃=0.5γ, a₃(0)=1",
     R"({"drive":{"omega12":[0.5,0],"omega24":[0.5,0],"omega23":[0.5,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":1.0},"initial":{"a3":[1.0,0]}})"},
    {"fig2c", "Fig. 2(c)", "Ω₁₂=Ω₂₄=Ω₂₃=0.5γ, a₂(0)=√0.8, a₃(0)=√0.2",
     R"({"drive":{"omega12":[0.5,0],"omega24":[0.5,0],"omega23":[0.5,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":1.0},)"
     R"("initial":{"a2":[0.8944271909999159,0],"a3":[0.4472135954999579,0]}})"},
    {"fig2d", "Fig. 2(d)", "Ω₁₂=Ω₂₄=Ω₂₃=0.5γ, a₁(0)=-a₄(0)=√0.5 (dark state)",
     R"({"drive":{"omega12":[0.5,0],"omega24":[0.5,0],"omega23":[0.5,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":1.0},)"
     R"("initial":{"a1":[0.7071067811865476,0],"a4":[0.7071067811865476,180]}})"},
    {"fig3a", "Fig. 3(a)", "Ω₁₂=0.5γ, Ω₂₄=Ω₂₃=0.5γ, a₁(0)=1",
     R"({"drive":{"omega12":[0.5,0],"omega24":[0.5,0],"omega23":[0.5,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":1.0},"initial":{"a1":[1.0,0]}})"},
    {"fig3b", "Fig. 3(b)", "Ω₁₂=0.5γ, Ω₂₄=Ω₂₃=1.0γ, a₁(0)=1",
     R"({"drive":{"omega12":[0.5,0],"omega24":[1.0,0],"omega23":[1.0,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":1.0},"initial":{"a1":[1.0,0]}})"},
    {"fig3c", "Fig. 3(c)", "Ω₁₂=0.5γ, Ω₂₄=2.0γ, Ω₂₃=1.0γ, a₁(0)=1",
     R"({"drive":{"omega12":[0.5,0],"omega24":[2.0,0],"omega23":[1.0,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":1.0},"initial":{"a1":[1.0,0]}})"},
    {"fig3d", "Fig. 3(d)", "Ω₁₂=0.5γ, Ω₂₄=2.0γ, Ω₂₃=2.0γ, a₁(0)=1",
     R"({"drive":{"omega12":[0.5,0],"omega24":[2.0,0],"omega23":[2.0,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":1.0},"initial":{"a1":[1.0,0]}})"},
    {"fig3e", "Fig. 3(e)", "Ω₁₂=0.5γ, Ω₂₄=2.0γ, Ω₂₃=4.0γ, a₁(0)=1",
     R"({"drive":{"omega12":[0.5,0],"omega24":[2.0,0],"omega23":[4.0,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":1.0},"initial":{"a1":[1.0,0]}})"},
    {"fig3f", "Fig. 3(f)", "Ω₁₂=0.5γ, Ω₂₄=3.0γ, Ω₂₃=4.0γ, a₁(0)=1",
     R"({"drive":{"omega12":[0.5,0],"omega24":[3.0,0],"omega23":[4.0,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":1.0},"initial":{"a1":[1.0,0]}})"},
    {"fig4", "Fig. 4", "Ω₁₂=0.5γ, Ω₂₄=3.0γ, Ω₂₃=4.0γ, γ₃=γ, a₁(0)=1 (inverted Y)",
     R"({"drive":{"omega12":[0.5,0],"omega24":[3.0,0],"omega23":[4.0,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":1.0},"initial":{"a1":[1.0,0]}})"},
    {"fig4-lambda", "Fig. 4 (dashed)", "Ω₁₂=0.5γ, Ω₂₄=3.0γ, Ω₂₃=0 (Λ-scheme comparison)",
     R"({"drive":{"omega12":[0.5,0],"omega24":[3.0,0],"omega23":[0.0,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":1.0},"initial":{"a1":[1.0,0]}})"},
    {"fig5a", "Fig. 5(a)", "Ω₁₂=0.5γ, Ω₂₄=2.0γ, Ω₂₃=4.0γ, γ₃=0.5γ, a₁(0)=1",
     R"({"drive":{"omega12":[0.5,0],"omega24":[2.0,0],"omega23":[4.0,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":0.5},"initial":{"a1":[1.0,0]}})"},
    {"fig5b", "Fig. 5(b)", "Ω₁₂=0.5γ, Ω₂₄=2.0γ, Ω₂₃=4.0γ, γ₃=0.1γ, a₁(0)=1",
     R"({"drive":{"omega12":[0.5,0],"omega24":[2.0,0],"omega23":[4.0,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":0.1},"initial":{"a1":[1.0,0]}})"},
    {"fig5b-gamma0", "Fig. 5(b) (dashed)", "Ω₁₂=0.5γ, Ω₂₄=2.0γ, Ω₂₃=4.0γ, γ₃=0, a₁(0)=1",
     R"({"drive":{"omega12":[0.5,0],"omega24":[2.0,0],"omega23":[4.0,0]},)"
     R"("decay":{"gamma2":1.0,"gamma3":0.0},"initial":{"a1":[1.0,0]}})"},
    {"bare", "-", "Ω=0, a₂(0)=1 (undriven natural line)",
     R"({"drive":{},"decay":{"gamma2":1.0,"gamma3":1.0},"initial":{"a2":[1.0,0]}})"},
};

}  // namespace

const std::vector<Preset>& presets() { return kPresets; }

const Preset* find_preset(std::string_view name) {
    for (const auto& p : kPresets)
        if (name == p.name) return &p;
    return nullptr;
}

}  // namespace invy
