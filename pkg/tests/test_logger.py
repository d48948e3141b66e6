from sympow.utils.logger import UNTAGGED, _split_tag, logger


def test_tag_is_lifted_out_of_the_message():
    record = {"message": "🧮 [GB] 12 pairs", "extra": {}}
    _split_tag(record)
    assert record["extra"]["tag"] == "GB"
    assert record["message"] == "12 pairs"


def test_untagged_message_is_kept():
    record = {"message": "plain [not a tag]", "extra": {}}
    _split_tag(record)
    assert record["extra"]["tag"] == UNTAGGED
    assert record["message"] == "plain [not a tag]"


def test_sinks_see_the_tag_column():
    lines = []
    handler = logger.add(lines.append, format="{extra[tag]}|{message}", level="WARNING")
    try:
        logger.warning("🔣 [Scan] n=3 aborted")
        logger.warning("no tag here")
    finally:
        logger.remove(handler)
    assert [line.strip() for line in lines] == ["Scan|n=3 aborted", f"{UNTAGGED}|no tag here"]
