/// Every statement in scope for verification, as `(id, plain description)`. Each is checked by
/// exactly one registered suite.
pub const STATEMENTS: &[(&str, &str)] = &[
    ("flappy-hyperplanes-are-spiky", "A flappy hyperplane of a partial linear space is spiky."),
    ("spiky-non-flappy-example", "Rewiring projective 3-space through a bijection between two skew lines yields a spiky, non-flappy hyperplane."),
    ("nested-hyperplanes-example", "In the union of two planes of a projective space the common line and one of the planes are nested hyperplanes."),
    ("spiky-hyperplanes-are-minimal", "A hyperplane contained in a spiky hyperplane equals it."),
    ("restricted-hyperplane", "A hyperplane meets every substructure not inside it in a hyperplane of the substructure."),
    ("product-is-partial-linear-space", "A Segre product is a connected partial linear space whose triangles and strong subspaces lie in single fibres, and it inherits the gamma and Veblen properties."),
    ("product-of-affine-spaces", "A product of affine spaces with the some-slot parallelism is an affine partial linear space satisfying the Tamaschke and parallelogram conditions."),
    ("componentwise-parallelism-not-affine", "With the componentwise parallelism a product of affine spaces is partial affine but not affine."),
    ("slice-criterion", "A point set of a product is a hyperplane iff every slice is a hyperplane or the whole factor, and some slice is proper."),
    ("hyperplane-as-correlation", "In a two-factor product a hyperplane is the same as a pair of mutually inverse slice maps, not all constant."),
    ("flappy-spiky-through-slices", "A non-degenerate hyperplane is flappy iff all its slices are; a hyperplane is spiky iff every point has a spiky slice."),
    ("linear-factors-flappy-iff-nondegenerate", "For linear factors a hyperplane is flappy iff non-degenerate, and spiky iff every point has a proper slice."),
    ("degenerate-hyperplanes-not-flappy", "Degenerate hyperplanes of a product are not flappy."),
    ("product-of-factor-hyperplanes-degenerate", "The union of the cylinders over factor hyperplanes is a degenerate, non-spiky hyperplane."),
    ("degenerate-complement-is-product", "The complement of the union of cylinders is the product of the factor complements, with the componentwise parallelism."),
    ("complement-basic-properties", "A hyperplane complement is partial affine; for spiky hyperplanes it is affine iff every hyperplane point sees every outside point; complements of linear spaces are affine linear spaces; Veblenian ambients give the Tamaschke and parallelogram conditions."),
    ("linear-complement-converse-fails", "A non-linear space can have a hyperplane whose complement is an affine linear space."),
    ("complement-may-disconnect", "A flappy hyperplane of a strongly connected Veblenian gamma space can have a disconnected complement."),
    ("strong-subspaces-transfer", "In a Veblenian gamma space with lines of at least 4 points the strong subspaces of a complement are the traces of ambient strong subspaces."),
    ("hyperplane-recovered-from-parallel-classes", "For a flappy hyperplane of a Veblenian gamma space, collinearity on the hyperplane is read off triangles of the complement."),
    ("automorphism-restriction-extension", "Stabiliser elements restrict to complement automorphisms; complement automorphisms extend through directions, to ambient automorphisms when the near-plane conditions hold."),
    ("near-plane-conditions-in-veblen-gamma-spaces", "In a Veblenian gamma space with lines of at least 3 points every hyperplane meets near-planes in lines, and flappy hyperplanes have a near-plane over each of their lines."),
    ("complement-automorphisms-extend", "For a flappy hyperplane of a Veblenian gamma space every automorphism of the complement extends uniquely."),
    ("spiky-product-complement-not-affine", "The complement of a spiky hyperplane in a product of spaces on at least three points is not an affine partial linear space."),
    ("product-recovered-from-complement", "A product with a non-degenerate flappy hyperplane is determined by the complement."),
    ("product-complement-strong-subspaces-transfer", "For Veblenian gamma factors with lines of at least 4 points, strong subspaces of a product complement are traces of product strong subspaces."),
    ("product-complement-strong-subspaces-in-slices", "Maximal strong subspaces of a product complement are substitutions of strong subspaces of slice complements."),
    ("product-complement-strong-subspaces-affine", "A product complement satisfies the Tamaschke and parallelogram conditions, so its strong subspaces are affine spaces."),
    ("affine-product-parallelism-from-incidence", "In a product of two affine spaces the parallelism is the composite of the Veblen relation and the quadrangle relation."),
    ("cross-slot-parallels-by-quadrangles", "For a non-degenerate hyperplane and lines of at least 4 points, lines through one hyperplane point in different slots are quadrangle-parallel."),
    ("parallelism-split-by-slices", "Lines of a non-degenerate complement are parallel iff parallel within one slice, or in different slices and quadrangle-parallel."),
    ("same-slice-by-strong-chains", "Two lines of a product complement lie in one fibre iff a chain of strong subspaces sharing lines joins them."),
    ("parallelism-from-product-incidence", "The parallelism of a non-degenerate complement of a product of Veblenian gamma spaces is determined by incidence."),
    ("complement-automorphisms-of-products", "Automorphisms of the complement of a flappy hyperplane in a product are restrictions of product automorphisms preserving the hyperplane."),
    ("covering-by-affine-spaces", "Substituted strong subspaces of slice complements cover a product complement by affine spaces."),
    ("spiky-complement-not-product-of-affine-spaces", "The complement of a spiky hyperplane in a product of projective spaces is not a product of affine spaces."),
    ("perp-complement-automorphism-count", "The complement of a non-degenerate bilinear hyperplane in the square of a projective space has 2|GL(m,p)|/(p-1) automorphisms."),
    ("form-locus-hyperplane-or-all", "The zero locus of a segment-wise alternating form is a hyperplane or the whole product."),
    ("segment-nonzero-forms-give-hyperplanes", "A form non-zero on some segment has a hyperplane as zero locus; non-zero on all segments gives a non-degenerate one."),
    ("nondegenerate-hyperplane-exists", "Every product of Grassmann spaces over a prime field has a non-degenerate hyperplane."),
    ("gkz-iff-spiky", "For products of projective spaces a form is GKZ non-degenerate iff its zero locus is spiky."),
    ("grassmann-hyperplanes-are-form-loci", "The hyperplanes of an embeddable Grassmann space are the zero loci of non-zero alternating forms."),
    ("polar-hyperplanes-are-form-sections", "The hyperplanes of a polar space are its sections by projective hyperplanes not containing it."),
    ("polar-product-form-hyperplane", "A form non-zero on all segments and meeting the slice conditions cuts a non-degenerate hyperplane on a product of polar Grassmann spaces."),
    ("segment-nondegenerate-slices-flappy", "A form non-degenerate on a segment has flappy slice hyperplanes in that segment."),
    ("segment-nondegenerate-forms-flappy", "A form non-degenerate on all segments has a flappy zero locus."),
    ("symplectic-polar-product-flappy", "On a product of symplectic polar spaces a form non-zero on all segments cuts a flappy hyperplane."),
    ("isotropic-lines-flappy-hyperplane", "The totally isotropic lines of a non-degenerate symplectic form form a flappy hyperplane of the line Grassmannian."),
    ("projective-product-hyperplanes-bilinear", "Every hyperplane of a product of two projective spaces over a prime field is the zero locus of a bilinear form."),
    ("alternating-form-hyperplanes-not-spiky", "With at least three projective factors an alternating form has a non-spiky zero locus."),
    ("meeting-hyperplanes-not-spiky", "The k-subspaces meeting a fixed codimension-k subspace form a non-spiky hyperplane."),
    ("complementary-grassmann-product-hyperplane", "Pairs of k1- and k2-subspaces with k1+k2 = n that meet form a non-degenerate, non-spiky hyperplane."),
];
