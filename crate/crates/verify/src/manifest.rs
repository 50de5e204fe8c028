//! Static map from each check-producing operation to the check families that exercise it.

/// One operation and the id families (first two id components) registered for it.
#[derive(Clone, Copy, Debug)]
pub struct ManifestEntry {
    pub module: &'static str,
    pub op: &'static str,
    pub families: &'static [&'static str],
}

const fn entry(module: &'static str, op: &'static str, families: &'static [&'static str]) -> ManifestEntry {
    ManifestEntry { module, op, families }
}

pub const MANIFEST: &[ManifestEntry] = &[
    entry("simplex", "delta/sigma", &["simplex.cofaces"]),
    entry("simplex", "compose", &["simplex.compose"]),
    entry("simplex", "enumerate_maps", &["simplex.enumerate"]),
    entry("simplex", "s_alpha/m_alpha", &["simplex.counting"]),
    entry("simplex", "check_simplex_relations", &["simplex.relations"]),
    entry("simplex", "s_alpha_transformation_check", &["simplex.s_alpha"]),
    entry("salg", "eval_morphism", &["salg.eval"]),
    entry("salg", "check_presentation", &["salg.presentation"]),
    entry("salg", "check_morphism", &["salg.morphism"]),
    entry("salg", "tensor_over_A", &["salg.tensor"]),
    entry("salg", "simplex_tensor", &["salg.simplex_tensor"]),
    entry("salg", "vertex_restriction", &["salg.vertex"]),
    entry("salg", "compose_morphisms/morphisms_equal", &["salg.compose"]),
    entry("models", "build", &["models.build"]),
    entry("models", "can_map", &["models.can"]),
    entry("models", "rho_action", &["models.rho"]),
    entry("models", "zeta", &["models.zeta"]),
    entry("models", "f_skip/g_skip", &["models.skip", "models.skip_wrap", "models.f_vs_g"]),
    entry("models", "f_composite/g_composite", &["models.composite", "models.f_vs_g_composite"]),
    entry("models", "aux_diagrams_check", &["models.aux"]),
    entry("homotopy", "h_tilde", &["h_tilde.simplicial", "h_tilde.telescoping"]),
    entry("homotopy", "h_tilde_vertex_check", &["h_tilde.vertex"]),
    entry("homotopy", "h_small/k_small", &["h_small.simplicial", "h_small.vertex", "k_small.simplicial"]),
    entry("homotopy", "t_factor", &["t_factor.values"]),
    entry("homotopy", "master_H", &["masterH.simplicial", "masterH.vertex", "masterH.diagram"]),
    entry("homotopy", "master_K", &["masterK.simplicial", "masterK.vertex", "masterK.diagram"]),
    entry("doldkan", "assemble", &["homology.complex"]),
    entry("doldkan", "homology", &["homology.groups"]),
    entry("doldkan", "pi0", &["homology.pi0"]),
    entry("doldkan", "induced_map_on_homology", &["homology.induced"]),
    entry("hopf", "build_hopf", &["hopf.certify"]),
    entry("hopf", "check_hopf_axioms", &["hopf.coassoc", "hopf.counit", "hopf.source", "hopf.target", "hopf.antipode"]),
    entry("hopf", "pure_char_check", &["hopf.purechar", "hopf.genericpi"]),
];

/// Operations that drive or report checks rather than being checked themselves.
pub const PLUMBING: &[(&str, &str)] = &[
    ("homotopy", "run_homotopy_suite"),
    ("verify", "run_suite"),
    ("verify", "list_checks"),
    ("verify", "emit_report"),
];
