from unittest import TestCase, main

from groebner import Ideal, PolynomialRing
from localalg.exceptions import AffineModeRefused, BaseResidueNotPrimeField, \
    NonHomogeneousRelation, PresentationError, VariableNameClash, \
    VariableNotNilpotent
from localalg.fileformat import parse_presentation_file
from localalg.presentation import AlgebraPresentation, BaseAlgebra, \
    FieldBase, fiber, minimalize, mu_local, validate

TEXT = """
field Q
base R { vars t; relations t^2 }
algebra A2 over R { vars x; relations x^2 }
algebra N1 { vars x, y; relations x^2, x*y }
algebra L1 { mode local; vars x, y; relations x^2 - y^3, x*y }
algebra L3 { mode local; vars x, y; relations y - x^2, x^3 }
"""


def algebras():
    return parse_presentation_file(TEXT).algebras


class AlgebraPresentationTests(TestCase):
    """
    Tests how presentations carry their base relations and variables
    """

    def test_base_relations_are_inherited(self):
        a2 = algebras()['A2']
        self.assertEqual(a2.all_variables, ('t', 'x'))
        self.assertEqual([str(r) for r in a2.relations], ['t^2', 'x^2'])
        self.assertEqual([str(r) for r in a2.own_relations()], ['x^2'])

    def test_duplicate_relations_collapse(self):
        n = AlgebraPresentation('N', FieldBase(), ('x',), ['x^2', 'x^2', '0'])
        self.assertEqual(len(n.relations), 1)

    def test_variable_name_clash(self):
        base = algebras()['A2'].base
        with self.assertRaises(VariableNameClash):
            AlgebraPresentation('A', base, ('t',))

    def test_unknown_mode(self):
        with self.assertRaises(PresentationError):
            AlgebraPresentation('A', FieldBase(), ('x',), mode='global')

    def test_renamed(self):
        a2 = algebras()['A2'].renamed({'x': 'z'})
        self.assertEqual(a2.variables, ('z',))
        self.assertEqual([str(r) for r in a2.own_relations()], ['z^2'])
        self.assertEqual(a2.base, algebras()['A2'].base)

    def test_with_relations(self):
        n1 = algebras()['N1']
        m = n1.with_relations(list(n1.relations) + [n1.ring.parse('y^2')],
                              name='M')
        self.assertEqual(m.name, 'M')
        self.assertEqual(len(m.relations), 3)

    def test_base_over_a_base(self):
        a2 = algebras()['A2']
        with self.assertRaises(PresentationError):
            BaseAlgebra(a2)

    def test_equality(self):
        self.assertEqual(algebras()['N1'], algebras()['N1'])
        self.assertNotEqual(algebras()['N1'], algebras()['L1'])
        self.assertEqual(FieldBase('Q'), FieldBase())
        self.assertNotEqual(FieldBase('Fp:7'), FieldBase())


class ValidationTests(TestCase):
    """
    Tests the mode invariants enforced by validate
    """

    def test_graded_needs_homogeneous_relations(self):
        bad = AlgebraPresentation('W', FieldBase(), ('x', 'y'), ['x^2 - y^3'])
        with self.assertRaises(NonHomogeneousRelation):
            validate(bad)

    def test_local_needs_nilpotent_variables(self):
        bad = AlgebraPresentation('W', FieldBase(), ('x', 'y'), ['x^2'],
                                  mode='local')
        with self.assertRaises(VariableNotNilpotent) as raised:
            validate(bad)
        self.assertEqual(raised.exception.variable, 'y')

    def test_residue_field(self):
        bad = AlgebraPresentation('W', FieldBase(), ('x',), ['x - 1'])
        with self.assertRaises(BaseResidueNotPrimeField):
            validate(bad)

    def test_affine_refused(self):
        affine = AlgebraPresentation('W', FieldBase(), ('x',), ['x - 1'],
                                     mode='affine')
        with self.assertRaises(AffineModeRefused):
            validate(affine)

    def test_base_is_validated(self):
        base = BaseAlgebra(AlgebraPresentation('R', FieldBase(), ('t',),
                                               ['t^2 - t^3']))
        a = AlgebraPresentation('A', base, ('x',))
        with self.assertRaises(NonHomogeneousRelation):
            validate(a)

    def test_valid(self):
        for name, a in algebras().items():
            local = validate(a)
            self.assertEqual(local.name, name)
            self.assertEqual(local.mode, a.mode)
            self.assertIs(local.presentation, a)


class MinimalizeTests(TestCase):
    """
    Tests removal of linear parts from presentations
    """

    def test_local_linear_relation(self):
        minimal = minimalize(algebras()['L3'])
        ring = PolynomialRing('Q', ('x',))
        self.assertEqual(minimal.variables, ('x',))
        self.assertTrue(minimal.base.is_field)
        self.assertTrue(minimal.ideal.equals(Ideal.parse(ring, ['x^3'])))

    def test_graded_linear_relation(self):
        a = AlgebraPresentation('A', FieldBase(), ('x', 'y', 'z'),
                                ['z - x', 'x*y', 'z^2'])
        minimal = minimalize(a)
        self.assertEqual(len(minimal.variables), 2)
        self.assertEqual(len(minimal.relations), 2)
        for r in minimal.relations:
            self.assertFalse(r.linear_part())

    def test_no_linear_parts(self):
        n1 = algebras()['N1']
        minimal = minimalize(n1)
        self.assertEqual(minimal.variables, ('x', 'y'))
        self.assertEqual(minimal.relations, n1.relations)

    def test_over_a_base(self):
        # R[x]/(x^2) over Q[t]/(t^2) is presented on t and x over Q
        minimal = minimalize(algebras()['A2'])
        self.assertEqual(minimal.variables, ('t', 'x'))
        self.assertTrue(minimal.base.is_field)

    def test_residue_field(self):
        base = algebras()['A2'].base
        b1 = AlgebraPresentation('B1', base, (), ['t'])
        minimal = minimalize(b1)
        self.assertEqual(minimal.variables, ())
        self.assertEqual(minimal.relations, ())

    def test_cached_on_local_algebra(self):
        local = validate(algebras()['L3'])
        self.assertIs(local.minimal, local.minimal)
        self.assertEqual(local.minimal.presentation.variables, ('x',))


class FiberTests(TestCase):
    """
    Tests the closed fiber A / m_R A
    """

    def test_fiber(self):
        f = fiber(algebras()['A2'])
        self.assertEqual(f.name, 'A2_fiber')
        self.assertTrue(f.base.is_field)
        self.assertEqual(f.variables, ('x',))
        self.assertEqual([str(r) for r in f.relations], ['x^2'])

    def test_fiber_substitutes_base_variables(self):
        base = algebras()['A2'].base
        a3 = AlgebraPresentation('A3', base, ('x',), ['x^2 - t*x'])
        self.assertEqual([str(r) for r in fiber(a3).relations], ['x^2'])


class MinimalGeneratorTests(TestCase):

    def test_mu_local(self):
        ring = PolynomialRing('Q', ('x', 'y'))
        self.assertEqual(mu_local(Ideal.parse(ring, ['x^2 - y^3', 'x*y'])), 2)
        self.assertEqual(mu_local(Ideal.parse(
            ring, ['x^2 - y^3', 'x*y', 'x^3', 'y^4'])), 2)
        self.assertEqual(mu_local(Ideal(ring)), 0)


if __name__ == '__main__':
    main()
