"""Board graph parsing, validation and the packaged board files."""
import pytest

from boardkit.core.graph import BoardFormatError, BoardGraph, grid_ids, parse_grid_id
from boardkit.games import GameId, load_board

MINI = """\
boardgraph 1
meta name mini
position a1 0 0
position b1 1 0
position c1 2 0
edge a1 b1
edge b1 c1
jump a1 b1 c1
line a1 b1 c1
"""


def test_parse_minimal_board():
    board = BoardGraph.parse(MINI)
    assert board.name == "mini"
    assert board.ids == ("a1", "b1", "c1")
    assert board.coords[1] == (1.0, 0.0)
    assert board.edges == ((0, 1), (1, 2))
    assert board.jumps == ((0, 1, 2),)
    assert board.lines == ((0, 1, 2),)
    assert len(board) == 3


def test_neighbors_sorted_and_symmetric():
    board = BoardGraph.parse(MINI)
    assert board.neighbors[0] == (1,)
    assert board.neighbors[1] == (0, 2)
    assert board.neighbors[2] == (1,)


def test_jumps_from_indexed_by_origin():
    board = BoardGraph.parse(MINI)
    assert board.jumps_from[0] == ((1, 2),)
    assert board.jumps_from[1] == ()


def test_round_trip_serialize_parse():
    board = BoardGraph.parse(MINI)
    again = BoardGraph.parse(board.serialize())
    assert again.ids == board.ids
    assert again.edges == board.edges
    assert again.jumps == board.jumps
    assert again.lines == board.lines
    assert again.coords == board.coords


def test_comments_and_blank_lines_ignored():
    text = "# leading comment\n\nboardgraph 1\nposition a1 0 0  # trailing\n"
    board = BoardGraph.parse(text)
    assert board.ids == ("a1",)


def test_missing_header_rejected():
    with pytest.raises(BoardFormatError, match="header"):
        BoardGraph.parse("position a1 0 0\n")


def test_unsupported_version_rejected():
    with pytest.raises(BoardFormatError, match="version"):
        BoardGraph.parse("boardgraph 99\n")


def test_empty_file_rejected():
    with pytest.raises(BoardFormatError, match="empty"):
        BoardGraph.parse("")


def test_unknown_record_rejected():
    with pytest.raises(BoardFormatError, match="unknown record"):
        BoardGraph.parse("boardgraph 1\nwedge a1 b1\n")


def test_unknown_position_reference_rejected():
    with pytest.raises(BoardFormatError, match="unknown position id"):
        BoardGraph.parse("boardgraph 1\nposition a1 0 0\nedge a1 zz\n")


def test_bad_record_shapes_report_line_numbers():
    with pytest.raises(BoardFormatError) as err:
        BoardGraph.parse("boardgraph 1\nposition a1 0 0\nposition b1 1\n")
    assert err.value.line_no == 3


def test_duplicate_position_id_rejected():
    with pytest.raises(BoardFormatError):
        BoardGraph.parse("boardgraph 1\nposition a1 0 0\nposition a1 1 0\n")


def test_grid_id_helpers_round_trip():
    ids = grid_ids(3, 2)
    assert ids == ["a1", "a2", "b1", "b2", "c1", "c2"]  # id-sorted order
    assert parse_grid_id("c2") == (2, 1)


EXPECTED_SHAPE = {
    GameId.TICTACTOE: (9, 8),
    GameId.TAPATAN: (9, 8),
    GameId.ALQUERQUE: (25, 0),
    GameId.TSORO_YEMATATU: (25, 24),
    GameId.FIVE_FIELD_KONO: (25, 0),
    GameId.REVERSI: (64, 0),
}


@pytest.mark.parametrize("game", list(GameId))
def test_packaged_boards_load_and_validate(game):
    board = load_board(game)
    positions, lines = EXPECTED_SHAPE[game]
    assert len(board) == positions
    assert len(board.lines) == lines
    board.validate()


def test_alquerque_board_has_jumps_along_edges():
    board = load_board(GameId.ALQUERQUE)
    assert board.jumps, "capture game needs jump records"
    for frm, over, to in board.jumps:
        assert over in board.neighbors[frm]
        assert to in board.neighbors[over]
        assert to != frm


def test_kono_board_is_diagonal_only():
    board = load_board(GameId.FIVE_FIELD_KONO)
    for a, b in board.edges:
        (x1, y1), (x2, y2) = board.coords[a], board.coords[b]
        assert abs(x1 - x2) == 1 and abs(y1 - y2) == 1


def test_reversi_board_eight_neighbor_grid():
    board = load_board(GameId.REVERSI)
    assert len(board.edges) == 210  # 8-neighbor adjacency on 8x8
    assert len(board.ids) == 64 and board.ids[0] == "a1" and board.ids[-1] == "h8"
    center = board.index["d4"]
    assert len(board.neighbors[center]) == 8


def test_tapatan_board_has_center_connections():
    board = load_board(GameId.TAPATAN)
    center = board.index["b2"]
    assert len(board.neighbors[center]) == 8
