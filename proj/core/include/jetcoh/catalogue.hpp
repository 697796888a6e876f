#pragma once

#include "jetcoh/cochain.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jetcoh {

enum class Generator { cbar0, c0omega, c1, cbar1, c2, cbar2, c5, c7 };

/// flat: pure determinants; connection: corrected with T, R; covariant: built
/// from ∇ (expanded in T); omega: connection form times the 1-form w.
enum class Form { flat, connection, covariant, omega };

std::string_view generator_name(Generator g);   // "cbar0", "c0omega", "c1", ...
std::optional<Generator> generator_from_name(std::string_view name);
std::string_view form_name(Form f);
std::optional<Form> form_from_name(std::string_view name);
const std::vector<Generator>& all_generators();

/// Module parameter at which the generator is a cocycle.
int generator_lambda(Generator g);

struct CatalogueEntry {
    Generator generator{};
    Form form{};
    Cochain2 cochain;
    ActionMode mode = ActionMode::lie;
    /// Trivial-action entries whose values only make sense after integration
    /// (the cocycle identity holds modulo total derivatives).
    bool integrated = false;
    /// λ - value_weight: 1 for the barred families before pairing with w.
    int omega_deficit = 0;
};

/// The expression of `g` in the requested form. The connection form of c7 has
/// no closed printed formula and must be supplied (from solve_corrections).
/// Throws InvalidArgument for combinations that do not exist.
CatalogueEntry catalogue(Generator g, Form form, const std::optional<Cochain2>& derived_c7 = std::nullopt,
                         const JetLimits& limits = {});

/// The symbol 2 det(3,6) - 9 det(4,5) with λ = 7.
Cochain2 c7_symbol(const JetLimits& limits = {});

/// The covariant c7 with the pairing exactly as printed (∇³ with ∇⁴), which has
/// weight 5 and is kept only to show that it is not the λ = 7 cocycle.
Cochain2 c7_covariant_as_printed(const JetLimits& limits = {});

/// ∇^p f ∇^q g - ∇^q f ∇^p g on the vector fields f, g.
DiffExpr covariant_det(int p, int q, const JetLimits& limits = {});

}  // namespace jetcoh
