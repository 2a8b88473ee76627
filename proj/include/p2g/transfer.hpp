#pragma once

#include "p2g/cochain.hpp"
#include "p2g/wreath.hpp"

#include <vector>

namespace p2g {

// (S_n wr G, A^n) induced by a (G, A) module: permute coordinates after the
// componentwise action, ((sigma,g) . a)_j = g_{sigma^{-1}(j)} . a_{sigma^{-1}(j)}.
struct WreathModule {
    WreathGroup wreath;
    ModulePtr base;
    ModulePtr module;
    ProductShape coeff_shape;
};

WreathModule wreath_module(int n, const ModulePtr& base, const Caps& caps = default_caps());

// Cochain transfer into the wreath product: the j-th component of the image
// at ((s1,g1),...,(sk,gk)) is c(g_{1,p1^{-1}(j)}, ..., g_{k,pk^{-1}(j)}) with
// p_i = s1 ... s_i. A morphism of cochain complexes.
Cochain xi(const WreathModule& wm, const Cochain& c, const Caps& caps = default_caps());
Cochain xi(int n, const Cochain& c, const Caps& caps = default_caps());

/// One value of xi(c) at a tuple of wreath elements, without materializing.
Elem xi_value(const WreathModule& wm, const Cochain& c, std::span<const Elem> args);

// (prod G_i, prod A_i) with componentwise action.
struct ProductModule {
    std::vector<ModulePtr> factors;
    ModulePtr module;
    ProductShape acting_shape;
    ProductShape coeff_shape;
};

ProductModule product_module(const std::vector<ModulePtr>& factors,
                             const Caps& caps = default_caps());

// Product cocycle: componentwise evaluation after the canonical shuffle
// (prod G_i)^k = prod (G_i^k). Class-injective on cocycle families.
Cochain zeta(const ProductModule& pm, const std::vector<Cochain>& zs,
             const Caps& caps = default_caps());
Cochain zeta(const std::vector<Cochain>& zs, const Caps& caps = default_caps());

}  // namespace p2g
