# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

"""Sampling real algebraic sets: at least one isolating box in every
connected component of V(f_1..f_s) cut with the real space.

For a random change of coordinates A and a point p, the fiber systems of
depths 0..d are built, their multipliers eliminated, the resulting
zero-dimensional ideals solved and their real points mapped back through A.
"""

import multiprocessing

from fractions import Fraction

import utils

from bihom import betti_bound, critical_bound
from fiberstatus import FiberStatus
from groebner import (MonomialOrder, NotZeroDimensionalError, dimension, eliminate,
                      groebner_basis)
from interval import as_interval
from lagrange import (HypothesisViolation, MATRIX_ENTRY_BOUND, build_fiber_system,
                      fiber_constraints, lagrange_bezout_bound,
                      lagrange_membership_check, random_linear_change)
from logdecorator import LogDecorator
from parameterization import (ParameterizationError, SEPARATING_COEFFICIENT_BOUND,
                              evaluate_parameterization, solve_zero_dim)
from polycore import Polynomial, apply_linear_change
from realroots import isolate_real_roots

DEFAULT_SEED = 42
DEFAULT_WIDTH = Fraction(1, 2 ** 20)


class DepthResult(object):
    """Outcome of one fiber depth under a given (A, p)."""

    def __init__(self, depth, status, degree=None, bezout=None, generators=None,
                 parameterization=None, boxes=None, message=''):
        self.depth = depth
        self.status = status
        self.degree = degree
        self.bezout = bezout
        # Eliminated generators, in the original coordinates.
        self.generators = generators or []
        self.parameterization = parameterization
        self.boxes = boxes or []
        self.message = message


class DepthJob(object):
    def __init__(self, input, A, p, depth, d, seed, width,
                 separating_bound=SEPARATING_COEFFICIENT_BOUND):
        self.input = input
        self.A = A
        self.p = p
        self.depth = depth
        self.d = d
        self.seed = seed
        self.width = width
        self.separating_bound = separating_bound


def _loggerdeco(seed, depth):
    return LogDecorator(utils.getLogger(), {'seed': seed, 'depth': depth},
                        'seed %(seed)s depth %(depth)s %(message)s')


def solve_depth(job):
    """Solve the fiber system of one depth. Module level so that a
    multiprocessing Pool can pickle it."""
    loggerdeco = _loggerdeco(job.seed, job.depth)
    input = job.input
    xs = input.varnames
    system = build_fiber_system(input, job.A, job.p, job.depth, job.d)
    bezout = lagrange_bezout_bound(system.base)
    if system.l_vars:
        gens = eliminate(system.polys, system.l_vars, system.varnames)
    else:
        gens = list(system.polys)
    G = groebner_basis(gens, MonomialOrder.degrevlex(xs))
    inverse = job.A.inverse()
    generators = [apply_linear_change(g, inverse, xs) for g in G]
    if G.is_unit():
        loggerdeco.debug('eliminated ideal is <1>')
        return DepthResult(job.depth, FiberStatus.UNIT, degree=0, bezout=bezout,
                           generators=generators)
    dim = dimension(G)
    if dim > 0:
        loggerdeco.info('eliminated ideal has dimension %d', dim)
        return DepthResult(job.depth, FiberStatus.RETRIED, bezout=bezout,
                           message='eliminated ideal has dimension %d' % dim)
    rng = utils.spawn_rng(job.seed, 'separating', job.depth)
    try:
        param = solve_zero_dim(G, rng, bound=job.separating_bound)
        roots = isolate_real_roots(param.f, job.width)
        original = param.transformed(job.A)
        boxes = [evaluate_parameterization(original, root, job.width, job.depth, job.seed)
                 for root in roots]
    except ParameterizationError as e:
        loggerdeco.info('parameterization failed: %s', e)
        return DepthResult(job.depth, FiberStatus.RETRIED, bezout=bezout,
                           message=str(e))
    loggerdeco.debug('degree %d, %d real points', param.degree, len(boxes))
    return DepthResult(job.depth, FiberStatus.ZERO_DIM, degree=param.degree,
                       bezout=bezout, generators=generators,
                       parameterization=original, boxes=boxes)


def verify_on_variety(box, input, width=None):
    """True iff every f_j straddles zero on box, refined to width first."""
    if width is not None:
        box = box.refined(width)
    for f in input.polys:
        value = f.evaluate(box.coordinates)
        if not as_interval(value).contains_zero():
            return False
    return True


def _satisfies(box, generators):
    return all(as_interval(g.evaluate(box.coordinates)).contains_zero()
               for g in generators)


def dedup(results, width):
    """Boxes from all depths, lowest depth first, with duplicates removed.

    Two boxes are taken to hold the same point when, refined to width, they
    overlap and each lies on the other depth's eliminated variety.
    """
    kept = []
    for result in sorted(results, key=lambda r: r.depth):
        for box in result.boxes:
            box = box.refined(width)
            duplicate = False
            for other, other_result in kept:
                if (box.overlaps(other) and _satisfies(box, other_result.generators) and
                        _satisfies(other, result.generators)):
                    duplicate = True
                    break
            if not duplicate:
                kept.append((box, result))
    return [box for box, _ in kept]


class CrossCheck(object):
    def __init__(self, depth, dimension, points, consistent):
        self.depth = depth
        self.dimension = dimension
        self.points = points
        self.consistent = consistent


def cross_check_depth(input, A, p, depth, d, seed, width, generators,
                      matrix_bound=MATRIX_ENTRY_BOUND):
    """Solve the full multiplier ideal of depth < d by a generic change of
    all n + s coordinates and slicing, and check its real points against
    the eliminated generators of the default route."""
    loggerdeco = _loggerdeco(seed, depth)
    system = build_fiber_system(input, A, p, depth, d)
    ring = system.varnames
    B = random_linear_change(len(ring), utils.spawn_rng(seed, 'cross-check', depth),
                             matrix_bound)
    polys = [apply_linear_change(f, B, ring) for f in system.polys]
    order = MonomialOrder.degrevlex(ring)
    G = groebner_basis(polys, order)
    dim = dimension(G)
    if dim < 0:
        return CrossCheck(depth, dim, 0, True)
    slices = [Polynomial.variable(ring, name) for name in ring[:dim]]
    G = groebner_basis(polys + slices, order)
    if G.is_unit():
        return CrossCheck(depth, dim, 0, True)
    try:
        param = solve_zero_dim(G, utils.spawn_rng(seed, 'cross-check-separating', depth))
    except (NotZeroDimensionalError, ParameterizationError) as e:
        loggerdeco.warning('cross-check could not solve the sliced system: %s', e)
        return CrossCheck(depth, dim, 0, False)
    mapped = param.transformed(B).restricted(input.varnames).transformed(A)
    boxes = [evaluate_parameterization(mapped, root, width, depth, seed)
             for root in isolate_real_roots(param.f, width)]
    consistent = all(_satisfies(box, generators) for box in boxes)
    loggerdeco.debug('cross-check dimension %d, %d points, consistent %s',
                     dim, len(boxes), consistent)
    return CrossCheck(depth, dim, len(boxes), consistent)


class SampleReport(object):
    def __init__(self, input, seed, width, dimension, A=None, p=None, points=None,
                 depths=None, bounds=None, attempts=0, retried=None,
                 cross_checks=None, verified=None, lagrange_checked=None):
        self.input = input
        self.seed = seed
        self.width = Fraction(width)
        self.dimension = dimension
        self.A = A
        self.p = list(p or [])
        self.points = list(points or [])
        self.depths = list(depths or [])
        self.bounds = dict(bounds or {})
        self.attempts = attempts
        self.retried = sorted(set(retried or []))
        self.cross_checks = list(cross_checks or [])
        self.verified = list(verified or [])
        self.lagrange_checked = list(lagrange_checked or [])

    def __len__(self):
        return len(self.points)

    def depth_status(self, depth):
        for result in self.depths:
            if result.depth == depth:
                return result.status
        return None


class SampleRunner(object):
    """Drive the sampler for one input system.

    The retry budget is global: when any depth stays positive-dimensional
    all depths are recomputed under the next (A, p). A_RETRIES fresh
    matrices are tried first, then the last matrix with p shifted by 1 per
    coordinate, P_RETRIES times.
    """

    A_RETRIES = 3
    P_RETRIES = 3
    CERTIFICATION_WIDTH = Fraction(1, 2 ** 40)

    def __init__(self, input, seed=DEFAULT_SEED, width=DEFAULT_WIDTH, p=None,
                 parallel=False, cross_check=False, retries_a=None, retries_p=None,
                 matrix_bound=MATRIX_ENTRY_BOUND,
                 separating_bound=SEPARATING_COEFFICIENT_BOUND,
                 certification_width=None):
        if not input.assume_radical_smooth:
            raise ValueError('sampling requires the radical and smooth assumption')
        self.input = input
        self.seed = int(seed)
        self.width = Fraction(width)
        if self.width <= 0:
            raise ValueError('width must be positive, got %s' % self.width)
        self.base_p = [Fraction(x) for x in p] if p is not None else None
        self.parallel = parallel
        self.cross_check = cross_check
        self.retries_a = self.A_RETRIES if retries_a is None else retries_a
        self.retries_p = self.P_RETRIES if retries_p is None else retries_p
        self.matrix_bound = matrix_bound
        self.separating_bound = separating_bound
        self.certification_width = Fraction(certification_width or
                                            self.CERTIFICATION_WIDTH)
        self.loggerdeco = LogDecorator(utils.getLogger(), {'seed': self.seed},
                                       'seed %(seed)s %(message)s')

    def _schedule(self, d):
        """Yield (A, p) pairs in retry order."""
        n = self.input.n
        p0 = self.base_p if self.base_p is not None else [Fraction(0)] * max(d, 1)
        if len(p0) < d:
            raise ValueError('need %d pinned values, got %d' % (d, len(p0)))
        A = None
        for draw in range(self.retries_a + 1):
            A = random_linear_change(n, utils.spawn_rng(self.seed, 'A', draw),
                                     self.matrix_bound)
            yield A, list(p0)
        for shift in range(1, self.retries_p + 1):
            yield A, [x + shift for x in p0]

    def _solve_all(self, jobs):
        if self.parallel and len(jobs) > 1:
            pool = multiprocessing.Pool(min(len(jobs), multiprocessing.cpu_count()))
            try:
                return pool.map(solve_depth, jobs)
            finally:
                pool.close()
                pool.join()
        return [solve_depth(job) for job in jobs]

    def _bounds(self, d):
        degrees = self.input.degrees
        n = self.input.n
        return {
            'critical': critical_bound(degrees, n),
            'critical_regular': critical_bound(degrees, n, regular=True),
            'betti': betti_bound(degrees, n, d, self.input.assume_regular_sequence),
        }

    def run(self):
        input = self.input
        d = input.dimension()
        self.loggerdeco.info('input of dimension %d in %d variables', d, input.n)
        if d < 0:
            return SampleReport(input, self.seed, self.width, d)
        retried = []
        results = None
        attempts = 0
        for A, p in self._schedule(d):
            attempts += 1
            jobs = [DepthJob(input, A, p, i, d, self.seed, self.width,
                             self.separating_bound) for i in range(d + 1)]
            results = self._solve_all(jobs)
            failing = [r.depth for r in results if r.status == FiberStatus.RETRIED]
            if not failing:
                break
            self.loggerdeco.info('attempt %d: depths %s are not zero-dimensional',
                                 attempts, failing)
            retried.extend(failing)
        else:
            for r in results:
                if r.status == FiberStatus.RETRIED:
                    r.status = FiberStatus.FAILED
            raise HypothesisViolation(
                'depths %s stayed positive-dimensional after %d attempts; the input '
                'is probably not smooth or its ideal not radical' %
                (sorted(set(retried)), attempts))
        points = dedup(results, self.certification_width)
        bounds = self._bounds(d)
        if len(points) > bounds['betti']:
            raise HypothesisViolation('%d points exceed the bound %d' %
                                      (len(points), bounds['betti']))
        verified = [verify_on_variety(box, input, self.certification_width)
                    for box in points]
        lagrange_checked = []
        for box in points:
            pins, objective = fiber_constraints(input, A, p, box.fiber_depth, d)
            lagrange_checked.append(
                lagrange_membership_check(box.coordinates, input, objective, pins))
        if not all(verified) or not all(lagrange_checked):
            self.loggerdeco.error('certification failed: verified %s, lagrange %s',
                                  verified, lagrange_checked)
        cross_checks = []
        if self.cross_check:
            for r in results:
                if r.depth < d:
                    cross_checks.append(cross_check_depth(
                        input, A, p, r.depth, d, self.seed, self.width, r.generators,
                        self.matrix_bound))
        self.loggerdeco.info('%d points after %d attempts', len(points), attempts)
        return SampleReport(input, self.seed, self.width, d, A, p[:d], points,
                            results, bounds, attempts, retried, cross_checks,
                            verified, lagrange_checked)


def sample_real_points(input, seed=DEFAULT_SEED, width=DEFAULT_WIDTH, **kwargs):
    return SampleRunner(input, seed, width, **kwargs).run()
