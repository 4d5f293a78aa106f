"""Casos de uso equivalence, aperture, domination y riesz."""
from typing import Dict, List, Optional, Tuple

from ...domain.entities import ConstantBound, EquivalenceReport, StudyReport
from ...infrastructure.functionals import FunctionalSpec, resolve_functional
from ...shared.logging import log_measured_constant
from ..factories import StudyContext, create_reference_factorization
from ..services import (
    BAND_HEADER,
    RATIO_HEADER,
    NormTable,
    band_rows,
    domination_bounds,
    equivalence_report,
    evaluate_norms,
    flag_check,
    hardy_interpolation_check,
    pointwise_geometric_mean,
    ratio_rows,
    riesz_study,
    sobolev_checks,
    tent_lemma_check,
    upper_check,
)
from .study_use_case import StudyUseCase

BOUND_HEADER = ["name", "statement", "family_max", "finite", "passed"]


def _bound_rows(bounds: List[ConstantBound]) -> List[list]:
    return [[b.name, b.statement, b.family_max, b.finite, b.passed] for b in bounds]


class _BandStudy(StudyUseCase):
    """Evalúa tablas de normas en N y, si refine, en 2N con la misma familia."""

    def _tables(self, context: StudyContext, specs: List[FunctionalSpec]) -> Tuple[Dict[str, NormTable], Optional[Dict[str, NormTable]]]:
        section = context.config.study
        context.family.require_study_size(self.study, section.min_family_size)
        coarse = {
            spec.label: evaluate_norms(context.fact, spec, context.family, section.p, context.time_grid, context.max_workers)
            for spec in specs
        }
        if not section.refine:
            return coarse, None
        fine_context = context.refined()
        fine = {
            spec.label: evaluate_norms(
                fine_context.fact, spec, fine_context.family, section.p, fine_context.time_grid, context.max_workers
            )
            for spec in specs
        }
        return coarse, fine

    @staticmethod
    def _band(coarse, fine, a: str, b: str, p: float, spread_threshold: float, drift_threshold: float) -> EquivalenceReport:
        refined = (fine[a], fine[b]) if fine is not None else None
        return equivalence_report(coarse[a], coarse[b], p, refined, spread_threshold, drift_threshold)

    def _record_bands(self, report: StudyReport, bands: List[EquivalenceReport]) -> None:
        report.add_table("bands", BAND_HEADER, band_rows(bands))
        report.add_table("ratios", RATIO_HEADER, [row for band in bands for row in ratio_rows(band)])
        report.sections["reports"] = [band.to_dict() for band in bands]
        for band in bands:
            name = f"band_{band.functional_a}/{band.functional_b}@p={band.p:g}"
            report.require(band.passed, name)
            report.add_summary(f"spread {band.functional_a}/{band.functional_b} p={band.p:g}", band.spread)


class EquivalenceUseCase(_BandStudy):
    """Banda de razones ||A f||_p / ||B f||_p sobre la familia para cada p."""

    study = "equivalence"

    def _run(self, context: StudyContext, report: StudyReport) -> None:
        section = context.config.study
        spec_a = resolve_functional(section.a)
        spec_b = resolve_functional(section.b)
        specs = [spec_a] if spec_a == spec_b else [spec_a, spec_b]
        coarse, fine = self._tables(context, specs)

        bands = [
            self._band(coarse, fine, spec_a.label, spec_b.label, p, section.spread_threshold, section.drift_threshold)
            for p in section.p
        ]
        self._record_bands(report, bands)

        if len(set(section.p)) >= 2:
            check = hardy_interpolation_check(
                context.fact, context.family, min(section.p), max(section.p), context.time_grid,
                max_workers=context.max_workers,
            )
            self._record_checks(report, [check])
        report.parameters.update({"a": section.a, "b": section.b, "p": list(section.p), "members": context.family.labels})


class ApertureUseCase(_BandStudy):
    """
    Robustez de parámetros: apertura lambda frente a la apertura base
    (umbral de spread propio) y k = 2 frente a k = 1 en ambas direcciones.
    """

    study = "aperture"

    def _run(self, context: StudyContext, report: StudyReport) -> None:
        section = context.config.study
        base, *others = section.apertures
        specs: List[FunctionalSpec] = []
        pairs: List[Tuple[str, str, float]] = []
        for name in section.aperture_functionals:
            reference = resolve_functional(name, aperture=base)
            specs.append(reference)
            for aperture in others:
                wide = resolve_functional(name, aperture=aperture)
                specs.append(wide)
                pairs.append((wide.label, reference.label, section.aperture_spread_threshold))
        k1, k2 = resolve_functional("S_L"), resolve_functional("S_L_k2")
        specs += [s for s in (k1, k2) if s not in specs]
        pairs += [(k2.label, k1.label, section.spread_threshold), (k1.label, k2.label, section.spread_threshold)]

        unique = list({spec.label: spec for spec in specs}.values())
        coarse, fine = self._tables(context, unique)
        bands = [self._band(coarse, fine, a, b, p, threshold, section.drift_threshold) for a, b, threshold in pairs for p in section.p]
        self._record_bands(report, bands)
        report.parameters.update({"apertures": list(section.apertures), "functionals": list(section.aperture_functionals)})


class DominationUseCase(StudyUseCase):
    """
    Cotas unilaterales entre funcionales, la cota puntual de media
    geométrica y los ingredientes (interpolación, Poincaré, lema de tiendas).
    """

    study = "domination"

    def _run(self, context: StudyContext, report: StudyReport) -> None:
        section = context.config.study
        family = context.family
        family.require_study_size(self.study, section.min_family_size)

        # 1. Cotas ||A f|| <= C ||B f||
        bounds = domination_bounds(
            context.fact, family, section.p, context.time_grid, section.gamma, section.gamma_sweep, context.max_workers
        )
        report.add_table("bounds", BOUND_HEADER, _bound_rows(bounds))
        report.sections["bounds"] = [b.to_dict() for b in bounds]
        checks = [flag_check(f"bound_{b.name}", b.passed, b.family_max) for b in bounds]
        sweep = [b for b in bounds if b.name.startswith("S_hL<=C*N_hL^")]
        report.add_table("gamma_sweep", ["bound", "family_max"], [[b.name, b.family_max] for b in sweep])

        # 2. Cota puntual sobre los primeros miembros, estable bajo N -> 2N
        head = family.head(section.pointwise_members)
        pointwise = pointwise_geometric_mean(context.fact, head, context.time_grid, context.max_workers)
        report.sections["pointwise"] = pointwise.to_dict()
        checks.append(flag_check("pointwise_geometric_mean_finite", pointwise.finite, pointwise.family_max))
        log_measured_constant(self.logger, "C0_hat", pointwise.family_max)
        report.add_summary("C0_hat", pointwise.family_max)
        if section.refine:
            fine_context = context.refined()
            fine = pointwise_geometric_mean(
                fine_context.fact, fine_context.family.head(section.pointwise_members), fine_context.time_grid,
                context.max_workers,
            )
            a, b = pointwise.family_max, fine.family_max
            drift = max(a / b, b / a) if a > 0 and b > 0 else float("inf")
            report.sections["pointwise_refined"] = fine.to_dict()
            checks.append(upper_check("pointwise_geometric_mean_refinement", drift, section.drift_threshold))
            report.add_summary("C0_hat drift", drift)

        # 3. Interpolación de Sobolev y paso de Poincaré
        checks += sobolev_checks(context.grid, context.operator.m, section.interpolation_trials, section.seed)

        # 4. Lema de tiendas: hipótesis medida => conclusión con C1 finito
        rows = []
        for label, f in zip(head.labels, head.members):
            result = tent_lemma_check(context.fact, f, context.time_grid, section.p, section.tent_k_max)
            rows.append([label, result["c0"], result["hypothesis_holds"]] + [result["c1"][p] for p in section.p] + [result["verified"]])
            checks.append(flag_check(f"tent_lemma_{label}", result["verified"], result["c0"]))
        report.add_table(
            "tent_lemma",
            ["member", "c0", "hypothesis_holds"] + [f"c1_p{p:g}" for p in section.p] + ["verified"],
            rows,
        )

        self._record_checks(report, checks)
        report.add_summary("bounds", len(bounds))
        report.add_summary("gamma", section.gamma)


class RieszUseCase(StudyUseCase):
    """||nabla^m L^{-1/2} f||_{H^p} frente a ||f||_{H_L^p} con el laplaciano como referencia clásica."""

    study = "riesz"

    def _run(self, context: StudyContext, report: StudyReport) -> None:
        section = context.config.study
        family = context.family
        family.require_study_size(self.study, section.min_family_size)
        reference = create_reference_factorization(context.grid)
        bounds = riesz_study(context.fact, reference, family, section.p, context.time_grid, context.max_workers)
        report.add_table("bounds", BOUND_HEADER, _bound_rows(bounds))
        report.add_table(
            "constants",
            ["bound", "member", "constant"],
            [[b.name, label, c] for b in bounds for label, c in zip(b.member_labels, b.constants)],
        )
        report.sections["bounds"] = [b.to_dict() for b in bounds]
        self._record_checks(report, [flag_check(f"riesz_{b.name}_finite", b.finite, b.family_max) for b in bounds])
        for b in bounds:
            log_measured_constant(self.logger, "riesz_constant", b.family_max, bound=b.name)
            report.add_summary(f"max C {b.name}", b.family_max)
