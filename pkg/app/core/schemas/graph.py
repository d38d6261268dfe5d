from pydantic import BaseModel, Field


class GraphSnapshot(BaseModel):
    """
    Canonical JSON document of a binary attributed graph.

    Nodes and attributes are stored by name, in index order, so loading a
    snapshot reproduces the exact node and column ordering it was written with.

    Fields:
        node_ids        — external node identifiers, position = node index.
        attribute_names — attribute (hashtag) names, position = column index.
        edges           — directed edges as [src_id, dst_id] pairs.
        attributes      — active (node_id, attribute_name) pairs.
    """
    node_ids: list[str] = Field(description="External node identifiers in index order.")
    attribute_names: list[str] = Field(description="Attribute names in column order.")
    edges: list[tuple[str, str]] = Field(default_factory=list, description="Directed edges as (src, dst).")
    attributes: list[tuple[str, str]] = Field(default_factory=list, description="Active (node, attribute) pairs.")
