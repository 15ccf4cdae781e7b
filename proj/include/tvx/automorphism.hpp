/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "tvx/wall.hpp"

namespace tvx {

/// An algebra automorphism recorded by the images of ê_(1,0) and ê_(0,1).
template <class C>
struct GeneratorImagesT {
    Series<C> x;
    Series<C> y;

    bool operator==(const GeneratorImagesT& o) const { return x == o.x && y == o.y; }
    bool is_identity() const;
};

using GeneratorImages = GeneratorImagesT<QLaurent>;
using GeneratorImagesR = GeneratorImagesT<QRational>;

template <class C>
GeneratorImagesT<C> identity_images(ContextPtr ctx);

GeneratorImages images_of(ContextPtr ctx, const WallOperator& op);
template <class C>
GeneratorImagesT<C> images_of(ContextPtr ctx, const WallLog& h, int sign = 1);

/// f(z): substitutes the images into every monomial of z, using
/// ê_(a,b) = v^{-ab} ê_x^a ê_y^b.
template <class C>
Series<C> apply_images(const GeneratorImagesT<C>& f, const Series<C>& z);

/// f ∘ g.
template <class C>
GeneratorImagesT<C> compose(const GeneratorImagesT<C>& f, const GeneratorImagesT<C>& g);

/// Multiplicative inverse of a series of the form ê_β * (1 + higher order).
template <class C>
Series<C> invert_monomial_unit(const Series<C>& s);

}  // namespace tvx
