# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

class FiberStatus(object):

    ZERO_DIM = 'zero-dim'  # eliminated ideal is zero-dimensional, solved
    UNIT = 'unit'  # eliminated ideal is <1>, no points at this depth
    RETRIED = 'retried'  # depth was positive-dimensional under some (A, p)
    FAILED = 'failed'  # still positive-dimensional when the budget ran out


class ObjectiveKind(object):
    GENERAL = 'general'
    PROJECTION = 'projection'
    REDUCED_PROJECTION = 'reduced-projection'
    FIBER = 'fiber'


class ExitCode(object):
    OK = 0
    USAGE = 1  # bad arguments, unreadable or unparsable input
    HYPOTHESIS = 2  # retries exhausted or an input hypothesis is violated
