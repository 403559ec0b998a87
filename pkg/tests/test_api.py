"""Read-only JSON endpoints."""

import pytest


def test_health(client):
    response = client.get('/api/health')
    assert response.status_code == 200
    assert response.get_json() == {'name': 'Conflict Lattice', 'version': '1.0.0'}


def test_example_document(client):
    document = client.get('/api/examples/1').get_json()
    assert document['name'] == 'example1'
    assert document['sources'][0] == {'id': 1, 'lo': 0.0, 'hi': 12.0}
    assert len(document['sources']) == 4


def test_unknown_example_is_404(client):
    response = client.get('/api/examples/9')
    assert response.status_code == 404
    assert response.get_json()['type'] == 'UnknownExample'


def test_example_lattice(client):
    response = client.get('/api/examples/1/lattice')
    assert response.status_code == 200
    rows = {row['subset']: row['cf'] for row in response.get_json()['subsets']}
    assert rows['x1+x2+x3'] == 0.472222
    assert rows['x1+x2+x3+x4'] == 0.5625


def test_example_identify(client):
    report = client.get('/api/examples/2/identify').get_json()
    assert report['argmax'] == ['x1']
    assert report['normal']['minimal_ok'] is True
    assert report['monotone']['is_monotone'] is True
    assert report['steepest']['added'] == 'x1'
    grid_check = report['grid_check']
    assert grid_check['subset'] == 'x1+x2+x3+x4'
    assert grid_check['cf'] == pytest.approx(grid_check['grid'], abs=1e-3)


def test_drift_series(client):
    document = client.get('/api/drift?window=5').get_json()
    assert len(document['points']) == 86
    assert document['points'][0]['time'] == 5.0
    assert 0.0 <= document['summary']['max'] <= 1.0


def test_drift_subset_is_calmer(client):
    everyone = client.get('/api/drift').get_json()['summary']
    others = client.get('/api/drift?subset=x2,x3,x4').get_json()['summary']
    assert others['variance'] < everyone['variance']


def test_drift_bad_subset_is_400(client):
    response = client.get('/api/drift?subset=x2,x9')
    assert response.status_code == 400
    assert response.get_json()['type'] == 'UnknownSourceInSubset'


def test_drift_window_too_long_is_400(client):
    response = client.get('/api/drift?window=1000')
    assert response.status_code == 400
    assert response.get_json()['type'] == 'WindowTooLong'


def test_drift_unparseable_subset_is_400(client):
    assert client.get('/api/drift?subset=xx').status_code == 400
